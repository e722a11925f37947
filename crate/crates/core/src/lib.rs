//! Desk-scale two-stage whole-slide classification: discriminative instance
//! selection over a tiled synthetic slide feeding a recalibrated
//! multi-instance learning head.
//!
//! The pipeline runs in two stages. First, a patch scorer is swept over a
//! slide in overlapped blocks to produce a per-cell probability map, from
//! which the most discriminative patches per class are picked by greedy
//! non-maximum suppression and assembled into a fixed-size instance bag.
//! Second, the bag is classified by a small multi-instance head that fuses
//! local and global instance features, recalibrates each instance by a
//! learned softmax importance coefficient, average-pools, and classifies.
//!
//! Everything is written in safe Rust over `f64` values with hand-derived
//! analytic gradients, a seeded deterministic RNG, and bit-reproducible
//! reductions, so every numeric claim in the test suite can be checked
//! against an independent oracle.

pub mod instance_select;
pub mod ioutil;
pub mod numerics;
pub mod rmdl;
pub mod slide_synth;
pub mod tiling;
pub mod train_eval;
