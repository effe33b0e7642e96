//! Resource caps shared by the construction, the engine and the oracle.
//!
//! `BOOLGB_CAPS` overrides the defaults with comma-separated `key=value`
//! pairs, e.g. `BOOLGB_CAPS=pairs=5000000,basis=200000,n=14,vars=27`.

use crate::error::{Error, Result};
use crate::groebner::Limits;

pub const CAPS_ENV: &str = "BOOLGB_CAPS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub limits: Limits,
    /// Largest `n` the construction will build (`3^n` generators in `P_n`).
    pub max_n: usize,
    /// Largest number of variables the oracle will enumerate over.
    pub max_enum_vars: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            limits: Limits::default(),
            max_n: 12,
            max_enum_vars: 24,
        }
    }
}

impl Caps {
    /// Defaults with `BOOLGB_CAPS` applied, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV) {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }

    /// Applies `key=value` overrides. Keys: `pairs`, `basis`, `n`, `vars`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::format("caps", format!("expected key=value, got `{item}`"))
            })?;
            let value: u64 = value
                .trim()
                .parse()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| {
                    Error::format("caps", format!("`{item}` needs a positive integer"))
                })?;
            match key.trim() {
                "pairs" => self.limits.max_pairs = value,
                "basis" => self.limits.max_basis = value as usize,
                "n" => self.max_n = value as usize,
                "vars" | "points" => self.max_enum_vars = value as usize,
                other => return Err(Error::format("caps", format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        let c = Caps::default()
            .with_overrides("pairs=10, basis=20,n=3,vars=9")
            .unwrap();
        assert_eq!(c.limits.max_pairs, 10);
        assert_eq!(c.limits.max_basis, 20);
        assert_eq!(c.max_n, 3);
        assert_eq!(c.max_enum_vars, 9);
        assert_eq!(Caps::default().with_overrides("").unwrap(), Caps::default());
        assert!(Caps::default().with_overrides("pairs=0").is_err());
        assert!(Caps::default().with_overrides("pairs").is_err());
        assert!(Caps::default().with_overrides("speed=3").is_err());
    }
}
