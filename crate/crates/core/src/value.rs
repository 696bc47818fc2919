use std::fmt;
use std::ops::Add;

/// An integer extended by a bottom element `-inf`.
///
/// `NegInf` orders below every finite value and absorbs addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Finite(0);

    #[inline]
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::NegInf => None,
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl Add for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::NegInf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::NegInf => f.write_str("-inf"),
        }
    }
}
