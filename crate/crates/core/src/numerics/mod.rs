//! Minimal dense numerical kernel: matrices, a seeded RNG, the layer set the
//! multi-instance head needs (dense, instance normalization, leaky ReLU,
//! dropout, softmax, instance-axis pooling) with forward and backward passes,
//! Adam, step learning-rate schedules, and a finite-difference gradient
//! checker.
//!
//! All math is carried out in 64-bit floats. Reductions (sums, means, max)
//! run in ascending index order with sequential accumulation, so results are
//! bit-reproducible given a seed.

mod gradcheck;
mod layers;
mod matrix;
mod optim;
mod params;
mod rng;

pub use gradcheck::grad_check;
pub use layers::{
    dense_backward, dense_forward, dropout_backward, dropout_forward, instance_norm_backward,
    instance_norm_forward, leaky_relu_backward, leaky_relu_forward, pool_backward, pool_forward,
    softmax_rows, softmax_rows_backward, softmax_vec, softmax_vec_backward, DropoutMask,
    InstanceNormCache, Mode, PoolCache, PoolKind,
};
pub use matrix::Matrix;
pub use optim::{adam_step, AdamState, LrSchedule};
pub use params::{blocks_from_json, blocks_to_json, ParamBlocks};
pub use rng::{mix_seed, Rng};

use thiserror::Error;

/// Errors produced by the numerical kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("shape mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("data length {got} does not match {rows}x{cols}")]
    DataLength { rows: usize, cols: usize, got: usize },
    #[error("cannot normalize rows of width {cols}; need at least 2 entries per row")]
    DegenerateRow { cols: usize },
    #[error("dropout rate {rate} is outside [0, 1)")]
    InvalidRate { rate: f64 },
    #[error("softmax input is empty")]
    EmptyInput,
    #[error("cannot pool an empty bag")]
    EmptyBag,
    #[error("non-finite gradient in parameter block '{block}'")]
    NonFiniteGradient { block: String },
    #[error("parameter block '{block}' changed length between steps: {expected} vs {got}")]
    BlockShapeChanged {
        block: String,
        expected: usize,
        got: usize,
    },
    #[error("function is not deterministic: repeated evaluation gave {first} then {second}")]
    NonDeterministic { first: f64, second: f64 },
    #[error("parameter document is malformed: {reason}")]
    BadParamDocument { reason: String },
}

pub type Result<T> = std::result::Result<T, NumericsError>;
