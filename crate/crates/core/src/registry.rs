//! Supercuspidal data: the atomic inputs every base L-factor is read from.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `ρ̃ ≅ ρ′ν^{s₀}` with `alpha0 = q^{s₀}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualData {
    pub label: String,
    pub alpha0: Scalar,
}

/// An abstract supercuspidal representation `ρ` of `GL_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspidalDatum {
    pub label: String,
    pub r: u32,
    /// Order of the cyclic group of unramified characters `χ` with `ρχ ≅ ρ`.
    pub f: u32,
    /// `ω_ρ(ϖ)`.
    pub omega: Scalar,
    pub dual: Option<DualData>,
    /// The `α = q^{s₀}` at which `ρν^{s₀/2}` carries a Shalika functional.
    pub shalika: Vec<Scalar>,
}

impl CuspidalDatum {
    pub fn is_self_dual(&self) -> bool {
        self.dual.as_ref().is_some_and(|d| d.label == self.label)
    }
}

/// Which registry invariant was violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    DuplicateLabel,
    Dimension,
    SelfTwistOrder,
    UnitaryNormalization,
    UnknownDual,
    CentralCharacter,
    ShalikaShape,
    ShalikaCoset,
    ShalikaCentralCharacter,
    DualityInvolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("cuspidal `{label}`: {message} ({kind:?})")]
pub struct ValidationError {
    pub label: String,
    pub kind: Invariant,
    pub message: String,
}

impl ValidationError {
    fn new(label: &str, kind: Invariant, message: impl Into<String>) -> Self {
        ValidationError {
            label: label.to_string(),
            kind,
            message: message.into(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegistryFile {
    cuspidals: Vec<CuspidalDatum>,
}

const STANDARD_JSON: &str = include_str!("../data/std.json");

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Registry {
    cuspidals: BTreeMap<String, CuspidalDatum>,
}

impl Registry {
    /// Collects the data without checking anything but label uniqueness.
    /// Shalika sets are normalized to sorted sets.
    pub fn from_cuspidals(
        data: impl IntoIterator<Item = CuspidalDatum>,
    ) -> Result<Registry, ValidationError> {
        let mut cuspidals = BTreeMap::new();
        for mut d in data {
            d.shalika.sort();
            d.shalika.dedup();
            if cuspidals.contains_key(&d.label) {
                return Err(ValidationError::new(
                    &d.label,
                    Invariant::DuplicateLabel,
                    "label defined twice",
                ));
            }
            cuspidals.insert(d.label.clone(), d);
        }
        Ok(Registry { cuspidals })
    }

    /// Parses a registry document without validating it.
    pub fn parse_json(src: &str) -> Result<Registry> {
        let de = &mut serde_json::Deserializer::from_str(src);
        let file: RegistryFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            Error::RegistryFormat(format!(
                "line {}, column {}, field `{}`: {}",
                inner.line(),
                inner.column(),
                path,
                inner
            ))
        })?;
        Ok(Registry::from_cuspidals(file.cuspidals)?)
    }

    /// Parses and validates.
    pub fn from_json_str(src: &str) -> Result<Registry> {
        let reg = Registry::parse_json(src)?;
        reg.validate()?;
        Ok(reg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Registry> {
        let path = path.as_ref();
        let src = std::fs::read_to_string(path)
            .map_err(|e| Error::RegistryFormat(format!("{}: {e}", path.display())))?;
        Registry::from_json_str(&src)
    }

    /// The bundled registry of worked examples.
    pub fn standard() -> Registry {
        Registry::from_json_str(STANDARD_JSON).expect("bundled registry is valid")
    }

    pub fn standard_json() -> &'static str {
        STANDARD_JSON
    }

    pub fn to_json(&self) -> String {
        let file = RegistryFile {
            cuspidals: self.cuspidals.values().cloned().collect(),
        };
        serde_json::to_string_pretty(&file).expect("registry serializes")
    }

    pub fn get(&self, label: &str) -> Result<&CuspidalDatum> {
        self.cuspidals
            .get(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.cuspidals.contains_key(label)
    }

    pub fn cuspidals(&self) -> impl Iterator<Item = &CuspidalDatum> {
        self.cuspidals.values()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.cuspidals.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.cuspidals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuspidals.is_empty()
    }

    /// Checks every datum and the involutivity of duality; reports the first
    /// violation in label order.
    pub fn validate(&self) -> Result<(), ValidationError> {
        for d in self.cuspidals.values() {
            self.validate_datum(d)?;
        }
        Ok(())
    }

    fn validate_datum(&self, d: &CuspidalDatum) -> Result<(), ValidationError> {
        let label = d.label.as_str();
        if d.r == 0 || d.f == 0 {
            return Err(ValidationError::new(
                label,
                Invariant::Dimension,
                "r and f must be positive",
            ));
        }
        if !d.r.is_multiple_of(d.f) {
            return Err(ValidationError::new(
                label,
                Invariant::SelfTwistOrder,
                format!("f = {} does not divide r = {}", d.f, d.r),
            ));
        }
        if !d.omega.is_torsion() {
            return Err(ValidationError::new(
                label,
                Invariant::UnitaryNormalization,
                format!("omega = {} is not unitary", d.omega),
            ));
        }
        let r = i64::from(d.r);

        if let Some(dual) = &d.dual {
            if !dual.alpha0.is_torsion() {
                return Err(ValidationError::new(
                    label,
                    Invariant::UnitaryNormalization,
                    format!("alpha0 = {} is not unitary", dual.alpha0),
                ));
            }
            let Some(other) = self.cuspidals.get(&dual.label) else {
                return Err(ValidationError::new(
                    label,
                    Invariant::UnknownDual,
                    format!("dual label `{}` is not defined", dual.label),
                ));
            };
            if d.omega * other.omega != dual.alpha0.pow(r) {
                return Err(ValidationError::new(
                    label,
                    Invariant::CentralCharacter,
                    format!(
                        "omega * omega' = {} but alpha0^r = {}",
                        d.omega * other.omega,
                        dual.alpha0.pow(r)
                    ),
                ));
            }
            let back = other.dual.as_ref().filter(|b| b.label == d.label);
            let involutive = back.is_some_and(|b| {
                other.r == d.r && other.f == d.f && (b.alpha0 / dual.alpha0).in_mu(d.f)
            });
            if !involutive {
                return Err(ValidationError::new(
                    label,
                    Invariant::DualityInvolution,
                    format!("dual `{}` does not point back consistently", dual.label),
                ));
            }
        }

        if !d.shalika.is_empty() {
            let alpha0 = match &d.dual {
                Some(dual) if dual.label == d.label && d.r.is_multiple_of(2) => dual.alpha0,
                _ => {
                    return Err(ValidationError::new(
                        label,
                        Invariant::ShalikaShape,
                        "Shalika data requires a self-dual cuspidal of even dimension",
                    ))
                }
            };
            for a in &d.shalika {
                if !(*a / alpha0).in_mu(d.f) {
                    return Err(ValidationError::new(
                        label,
                        Invariant::ShalikaCoset,
                        format!("{a} is not in alpha0 * mu_{}", d.f),
                    ));
                }
                if a.pow(r / 2) != d.omega {
                    return Err(ValidationError::new(
                        label,
                        Invariant::ShalikaCentralCharacter,
                        format!(
                            "{a}^(r/2) = {} differs from omega = {}",
                            a.pow(r / 2),
                            d.omega
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Inverse roots of `L(s, ρ_a × ρ_b)`: the coset `α₀(a)·μ_{f(b)}` when
    /// `ρ̃_a` is an unramified twist of `ρ_b`, and nothing otherwise.
    pub fn rs_pair_roots(&self, a: &str, b: &str) -> Result<Vec<Scalar>> {
        let da = self.get(a)?;
        let db = self.get(b)?;
        if da.r != db.r {
            return Ok(Vec::new());
        }
        match &da.dual {
            Some(dual) if dual.label == b => {
                let mut v: Vec<Scalar> = Scalar::roots_of_unity(db.f)
                    .into_iter()
                    .map(|z| dual.alpha0 * z)
                    .collect();
                v.sort();
                Ok(v)
            }
            _ => Ok(Vec::new()),
        }
    }
}

impl fmt::Display for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.cuspidals.values() {
            write!(f, "{}: GL_{} f={} omega={}", d.label, d.r, d.f, d.omega)?;
            if let Some(dual) = &d.dual {
                write!(f, " dual={}@{}", dual.label, dual.alpha0)?;
            }
            if !d.shalika.is_empty() {
                let s: Vec<String> = d.shalika.iter().map(ToString::to_string).collect();
                write!(f, " shalika={{{}}}", s.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
