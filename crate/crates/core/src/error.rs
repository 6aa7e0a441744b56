use thiserror::Error;

use crate::partition::{GrassmannShape, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Grassmannian shape d={d}, n={n}: need 1 <= d <= n-1")]
    InvalidShape { d: usize, n: usize },

    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("partition {partition} does not fit the {rows}x{cols} box of G({d},{n})", rows = shape.d(), cols = shape.cols(), d = shape.d(), n = shape.n())]
    OutsideBox {
        partition: Partition,
        shape: GrassmannShape,
    },

    #[error("incompatible shapes {0} and {1}")]
    ShapeMismatch(GrassmannShape, GrassmannShape),

    #[error("element is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<usize>),

    #[error("degree {degree} is out of range 1..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },

    #[error("series argument has an invalid constant term: {0}")]
    ConstantTerm(String),

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("matrix is not antisymmetric at entry ({i},{j})")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("cannot parse {0}")]
    Parse(String),

    #[error("Pfaffian ring B_{m}({n}) needs m >= 1 and n >= 2m")]
    InvalidPfaffianParameters { m: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
