use crate::error::{Error, Result};

/// Environment variable that overrides every default cap at once.
pub const MAX_N_ENV: &str = "LATMIN_MAX_N";

/// Ground-set sizes beyond which `2^n` tables stop fitting in memory.
pub const HARD_MAX_N: usize = 30;

/// Size limits for the exponential operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Ideal and subset enumeration.
    pub enumerate: usize,
    /// Full set-function table construction.
    pub table: usize,
    /// Pairwise exchange and submodularity scans.
    pub verify: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumerate: 20,
            table: 16,
            verify: 12,
        }
    }
}

impl Caps {
    /// All three caps set to the same value.
    pub fn uniform(n: usize) -> Self {
        Caps {
            enumerate: n,
            table: n,
            verify: n,
        }
    }

    /// Defaults, unless `LATMIN_MAX_N` is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(raw) => Self::parse_override(&raw),
            Err(_) => Ok(Caps::default()),
        }
    }

    fn parse_override(raw: &str) -> Result<Self> {
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{MAX_N_ENV}={raw:?} is not an integer")))?;
        if n > HARD_MAX_N {
            return Err(Error::InvalidParameter(format!(
                "{MAX_N_ENV}={n} exceeds the hard limit of {HARD_MAX_N}"
            )));
        }
        Ok(Caps::uniform(n))
    }
}

pub(crate) fn check(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap || n > HARD_MAX_N {
        Err(Error::Size {
            what,
            n,
            cap: cap.min(HARD_MAX_N),
        })
    } else {
        Ok(())
    }
}
