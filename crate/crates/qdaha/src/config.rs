//! Session configuration shared by the command-line front end and the
//! acceptance battery: which root datum, which lattice, how `v` is treated,
//! the seed, and the size bounds.

use serde::{Deserialize, Serialize};

use crate::clifford::DEFAULT_GROUP_BOUND;
use crate::daha::{v_symbolic, DahaContext};
use crate::error::{Error, Result};
use crate::modules::{parse_point, TorusPoint};
use crate::qtorus::DEFAULT_SEARCH_BOUND;
use crate::rootdata::{LatticeChoice, RootDatum, WeylGroup, BUILTIN_TYPES, DEFAULT_WEYL_BOUND};
use crate::scalars::{fmt_rational, parse_rational, Frac, Rational};
use crate::suite::DEFAULT_SEED;

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "QTORUS_SEED";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VMode {
    Symbolic,
    Value(Rational),
}

impl std::str::FromStr for VMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" | "v" => Ok(VMode::Symbolic),
            other => Ok(VMode::Value(parse_rational(other)?)),
        }
    }
}

impl std::fmt::Display for VMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VMode::Symbolic => write!(f, "symbolic"),
            VMode::Value(r) => write!(f, "{}", fmt_rational(r)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Bounds {
    /// Sup-radius of module windows.
    pub window_radius: i64,
    pub group_order: usize,
    pub weyl_order: usize,
    /// Radius for separating-vector searches.
    pub search_radius: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            window_radius: 2,
            group_order: DEFAULT_GROUP_BOUND,
            weyl_order: DEFAULT_WEYL_BOUND,
            search_radius: DEFAULT_SEARCH_BOUND,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub root_system: String,
    pub cartan: Option<Vec<Vec<i64>>>,
    pub lattice: LatticeChoice,
    pub v: VMode,
    pub seed: u64,
    pub bounds: Bounds,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            root_system: "A1".into(),
            cartan: None,
            lattice: LatticeChoice::Weight,
            v: VMode::Symbolic,
            seed: DEFAULT_SEED,
            bounds: Bounds::default(),
        }
    }
}

impl SessionConfig {
    /// The seed from `QTORUS_SEED` when set, else the default.
    pub fn seed_from_env() -> Result<u64> {
        match std::env::var(SEED_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{SEED_ENV}='{s}' is not an integer"))),
            Err(_) => Ok(DEFAULT_SEED),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cartan.is_none() && !BUILTIN_TYPES.contains(&self.root_system.as_str()) {
            return Err(Error::Parse(format!(
                "unknown root system '{}' (built-ins: {})",
                self.root_system,
                BUILTIN_TYPES.join(", ")
            )));
        }
        let b = &self.bounds;
        if b.window_radius <= 0 || b.group_order == 0 || b.weyl_order == 0 || b.search_radius <= 0 {
            return Err(Error::Parse("bounds must be positive".into()));
        }
        Ok(())
    }

    pub fn datum(&self) -> Result<RootDatum> {
        self.validate()?;
        match &self.cartan {
            Some(a) => RootDatum::from_cartan(a, self.lattice),
            None => RootDatum::builtin(&self.root_system, self.lattice),
        }
    }

    pub fn weyl(&self, d: &RootDatum) -> Result<WeylGroup> {
        WeylGroup::with_bound(d, self.bounds.weyl_order)
    }

    pub fn daha(&self) -> Result<DahaContext> {
        DahaContext::new(self.datum()?)
    }

    pub fn v_frac(&self) -> Frac {
        match &self.v {
            VMode::Symbolic => v_symbolic(),
            VMode::Value(r) => Frac::rational(r.clone()),
        }
    }

    /// Header echoed at the top of every output.
    pub fn header(&self) -> serde_json::Value {
        serde_json::json!({
            "root_system": match &self.cartan { Some(_) => "cartan".to_string(), None => self.root_system.clone() },
            "lattice": format!("{:?}", self.lattice).to_lowercase(),
            "v": self.v.to_string(),
        })
    }
}

/// Splits `"(a, b, c)"` into its comma-separated entries.
pub fn split_tuple(s: &str) -> Vec<String> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if inner.trim().is_empty() {
        return Vec::new();
    }
    inner.split(',').map(|p| p.trim().to_string()).collect()
}

pub fn parse_int_tuple(s: &str) -> Result<Vec<i64>> {
    split_tuple(s)
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| Error::Parse(format!("'{p}' is not an integer")))
        })
        .collect()
}

pub fn parse_lambda(d: &RootDatum, s: &str) -> Result<TorusPoint> {
    parse_point(d, &split_tuple(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_and_modes() {
        assert_eq!(split_tuple("(-1, q^1/2)"), vec!["-1", "q^1/2"]);
        assert_eq!(parse_int_tuple("[1,-2]").unwrap(), vec![1, -2]);
        assert!(parse_int_tuple("(1,x)").is_err());
        assert_eq!("symbolic".parse::<VMode>().unwrap(), VMode::Symbolic);
        assert_eq!("1/2".parse::<VMode>().unwrap().to_string(), "1/2");
    }

    #[test]
    fn validation() {
        let mut c = SessionConfig::default();
        assert!(c.validate().is_ok());
        c.root_system = "E9".into();
        assert!(c.validate().is_err());
        let c = SessionConfig {
            bounds: Bounds {
                window_radius: 0,
                ..Bounds::default()
            },
            ..SessionConfig::default()
        };
        assert!(c.validate().is_err());
    }
}
