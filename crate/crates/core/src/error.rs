use alloc::string::String;
use core::fmt;

/// Machine-readable classification of [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    NotAdmissible,
    NotCharPoly,
    NotDivisible,
    BadInput,
    SizeCapExceeded,
    AsymmetricSpectrum,
    IndexOutOfRange,
    NotInAlgebra,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::NotAdmissible => "NotAdmissible",
            ErrorKind::NotCharPoly => "NotCharPoly",
            ErrorKind::NotDivisible => "NotDivisible",
            ErrorKind::BadInput => "BadInput",
            ErrorKind::SizeCapExceeded => "SizeCapExceeded",
            ErrorKind::AsymmetricSpectrum => "AsymmetricSpectrum",
            ErrorKind::IndexOutOfRange => "IndexOutOfRange",
            ErrorKind::NotInAlgebra => "NotInAlgebra",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A multiplicity vector with `d_n < d_{n+2}` for some `n`.
    NotAdmissible {
        weight: u64,
    },
    NotCharPoly(String),
    NotDivisible,
    BadInput(String),
    SizeCapExceeded {
        dim: usize,
        cap: usize,
    },
    AsymmetricSpectrum {
        weight: i64,
    },
    IndexOutOfRange {
        index: usize,
        bound: usize,
    },
    NotInAlgebra(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NotAdmissible { .. } => ErrorKind::NotAdmissible,
            Error::NotCharPoly(_) => ErrorKind::NotCharPoly,
            Error::NotDivisible => ErrorKind::NotDivisible,
            Error::BadInput(_) => ErrorKind::BadInput,
            Error::SizeCapExceeded { .. } => ErrorKind::SizeCapExceeded,
            Error::AsymmetricSpectrum { .. } => ErrorKind::AsymmetricSpectrum,
            Error::IndexOutOfRange { .. } => ErrorKind::IndexOutOfRange,
            Error::NotInAlgebra(_) => ErrorKind::NotInAlgebra,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAdmissible { weight } => write!(
                f,
                "multiplicity of weight {} is smaller than that of weight {}",
                weight,
                weight + 2
            ),
            Error::NotCharPoly(why) => write!(f, "not a characteristic polynomial: {}", why),
            Error::NotDivisible => f.write_str("polynomial division is not exact"),
            Error::BadInput(why) => write!(f, "bad input: {}", why),
            Error::SizeCapExceeded { dim, cap } => write!(
                f,
                "dimension {} exceeds the exact-mode cap {}; use randomized verification",
                dim, cap
            ),
            Error::AsymmetricSpectrum { weight } => {
                write!(
                    f,
                    "weights {} and {} have different multiplicities",
                    weight, -weight
                )
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {} out of range 1..={}", index, bound)
            }
            Error::NotInAlgebra(why) => write!(f, "matrix is not in the algebra: {}", why),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
