//! The arithmetic side: formal parameters `φ = φ₁ ⊕ ⋯ ⊕ φ_t` and the
//! decomposition `∧²(⊕φ_k) = ⊕∧²(φ_k) ⊕ ⊕_{i<j} φ_i ⊗ φ_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lfun::{l_rep_ext, l_seg_ext, l_seg_rs, l_seg_sym};
use crate::registry::Registry;
use crate::scalar::{EulerFactor, Scalar};
use crate::segment::{Representation, Segment};

/// A Weil–Deligne parameter, each summand named by the segment it
/// corresponds to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalParam {
    summands: Vec<Segment>,
}

impl FormalParam {
    pub fn new(summands: Vec<Segment>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyRepresentation);
        }
        Ok(FormalParam { summands })
    }

    /// `χ₁ ⊕ ⋯ ⊕ χ_m` with `χ_i(Frob) = a_i`.
    pub fn unramified(reg: &Registry, label: &str, satake: &[Scalar]) -> Result<Self> {
        Representation::unramified(reg, label, satake).map(FormalParam::from)
    }

    pub fn summands(&self) -> &[Segment] {
        &self.summands
    }

    /// Reorders the summands; `order` must be a permutation of `0..t`.
    pub fn permuted(&self, order: &[usize]) -> FormalParam {
        FormalParam {
            summands: order.iter().map(|&i| self.summands[i].clone()).collect(),
        }
    }

    /// `π(φ)`.
    pub fn to_representation(&self) -> Representation {
        Representation::new(self.summands.clone()).expect("nonempty by construction")
    }
}

impl From<Representation> for FormalParam {
    fn from(p: Representation) -> Self {
        FormalParam {
            summands: p.into_segments(),
        }
    }
}

impl fmt::Display for FormalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn assemble<F>(reg: &Registry, phi: &FormalParam, single: F) -> Result<EulerFactor>
where
    F: Fn(&Registry, &Segment) -> Result<EulerFactor>,
{
    let s = &phi.summands;
    let mut parts = Vec::new();
    for i in 0..s.len() {
        parts.push(single(reg, &s[i])?);
        for j in i + 1..s.len() {
            parts.push(l_seg_rs(reg, &s[i], &s[j])?);
        }
    }
    Ok(EulerFactor::product(&parts))
}

/// `L(s, ∧²φ)`, summands taken in the given order.
pub fn galois_ext(reg: &Registry, phi: &FormalParam) -> Result<EulerFactor> {
    assemble(reg, phi, l_seg_ext)
}

/// `L(s, Sym²φ)`.
pub fn galois_sym(reg: &Registry, phi: &FormalParam) -> Result<EulerFactor> {
    assemble(reg, phi, l_seg_sym)
}

/// `L(s, ∧²φ) = L(s, π(φ), ∧²)`.
pub fn langlands_agree(reg: &Registry, phi: &FormalParam) -> Result<bool> {
    Ok(galois_ext(reg, phi)? == l_rep_ext(reg, &phi.to_representation())?)
}
