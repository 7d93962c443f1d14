//! Scalar abstraction over the two supported floating-point widths.
//!
//! Every field array and every flux/moment operation is generic over [`Real`],
//! so a run executes entirely in the precision selected by the config. The
//! only sanctioned exception is diagnostics: global reductions always
//! accumulate in `f64` (see `parallel::reduce`).

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

/// Floating-point width selected for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precision {
    Fp32,
    Fp64,
}

impl Precision {
    pub fn bytes(self) -> usize {
        match self {
            Precision::Fp32 => 4,
            Precision::Fp64 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Precision::Fp32 => "fp32",
            Precision::Fp64 => "fp64",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fp32" | "f32" | "single" => Some(Precision::Fp32),
            "fp64" | "f64" | "double" => Some(Precision::Fp64),
            _ => None,
        }
    }
}

impl Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Field scalar: `f32` or `f64`.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Sum
    + Send
    + Sync
    + 'static
{
    const PRECISION: Precision;

    /// Complementary error function, evaluated natively at this width.
    fn erfc(self) -> Self;

    /// Lossy conversion from an `f64` constant.
    fn of(x: f64) -> Self;

    fn f64(self) -> f64;

    fn from_bits_u64(bits: u64) -> Self;
    fn to_bits_u64(self) -> u64;
}

impl Real for f64 {
    const PRECISION: Precision = Precision::Fp64;

    #[inline]
    fn erfc(self) -> Self {
        libm::erfc(self)
    }

    #[inline]
    fn of(x: f64) -> Self {
        x
    }

    #[inline]
    fn f64(self) -> f64 {
        self
    }

    #[inline]
    fn from_bits_u64(bits: u64) -> Self {
        f64::from_bits(bits)
    }

    #[inline]
    fn to_bits_u64(self) -> u64 {
        self.to_bits()
    }
}

impl Real for f32 {
    const PRECISION: Precision = Precision::Fp32;

    #[inline]
    fn erfc(self) -> Self {
        libm::erfcf(self)
    }

    #[inline]
    fn of(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn f64(self) -> f64 {
        self as f64
    }

    #[inline]
    fn from_bits_u64(bits: u64) -> Self {
        f32::from_bits(bits as u32)
    }

    #[inline]
    fn to_bits_u64(self) -> u64 {
        self.to_bits() as u64
    }
}
