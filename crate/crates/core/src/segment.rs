//! Zelevinsky segment calculus: derivatives, contragredients, linkage,
//! central characters and Langlands ordering.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::registry::Registry;
use crate::scalar::{fmt_rational, Rational, Scalar};

/// `Δ = [ρν^u, …, ρν^{u+ℓ-1}]` stored as `(label, ℓ, τ = q^u)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub label: String,
    pub len: u32,
    pub tau: Scalar,
}

impl Segment {
    pub fn new(label: impl Into<String>, len: u32, tau: Scalar) -> Self {
        Segment {
            label: label.into(),
            len,
            tau,
        }
    }

    /// `n(Δ) = ℓ·r(ρ)`.
    pub fn dim(&self, reg: &Registry) -> Result<u32> {
        Ok(self.len * reg.get(&self.label)?.r)
    }

    /// Real center exponent `Re(u) + (ℓ-1)/2`.
    pub fn center(&self) -> Rational {
        self.tau.qexp() + Rational::new(i64::from(self.len) - 1, 2)
    }

    /// `Δν^{s₀}` for `c = q^{s₀}`.
    pub fn twist(&self, c: Scalar) -> Segment {
        Segment::new(self.label.clone(), self.len, self.tau * c)
    }

    /// `q^{-2w}`: the root multiplier that moves a factor of the centered
    /// segment to this one.
    pub(crate) fn center_shift(&self) -> Scalar {
        self.tau.pow(-2) * Scalar::q_int(1 - i64::from(self.len))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}", self.label, self.len)?;
        if !self.tau.is_one() {
            write!(f, "@{}", fmt_rational(&self.tau.qexp()))?;
            let z = self.tau.zeta();
            if !z.is_zero() {
                write!(f, "~z{}/{}", z.numer(), z.denom())?;
            }
        }
        f.write_str("]")
    }
}

/// Result of differentiating a single segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derived {
    Segment(Segment),
    /// `Δ^{(k)} = 0`.
    Vanished,
    /// `Δ^{(n)} = 1`, the trivial representation of `GL_0`.
    Trivial,
}

/// Bernstein–Zelevinsky derivative of order `k`: truncation from the left
/// by `k/r` steps, zero unless `r | k`.
pub fn derivative_segment(reg: &Registry, d: &Segment, k: u32) -> Result<Derived> {
    let r = reg.get(&d.label)?.r;
    let n = d.len * r;
    if k > n {
        return Err(Error::OutOfRange { k, max: n });
    }
    if k == 0 {
        return Ok(Derived::Segment(d.clone()));
    }
    if !k.is_multiple_of(r) {
        return Ok(Derived::Vanished);
    }
    if k == n {
        return Ok(Derived::Trivial);
    }
    let j = k / r;
    Ok(Derived::Segment(Segment::new(
        d.label.clone(),
        d.len - j,
        d.tau * Scalar::q_int(i64::from(j)),
    )))
}

/// Contragredient `Δ̃ = [ρ̃ν^{-u-ℓ+1}, …, ρ̃ν^{-u}]`, written on the dual
/// label as `τ′ = α₀·τ⁻¹·q^{1-ℓ}`.
pub fn dual_segment(reg: &Registry, d: &Segment) -> Result<Segment> {
    let datum = reg.get(&d.label)?;
    let dual = datum
        .dual
        .as_ref()
        .ok_or_else(|| Error::NoDualData(d.label.clone()))?;
    let tau = dual.alpha0 * d.tau.inv() * Scalar::q_int(1 - i64::from(d.len));
    Ok(Segment::new(dual.label.clone(), d.len, tau))
}

/// Offset `m` with `Δ_b` starting at `ρν^{u_a + m}`, if both segments lie on
/// the same cuspidal line (twists differing by `q^ℤ` times a self-twist).
fn line_offset(reg: &Registry, a: &Segment, b: &Segment) -> Result<Option<i64>> {
    if a.label != b.label {
        return Ok(None);
    }
    let f = reg.get(&a.label)?.f;
    let ratio = b.tau / a.tau;
    let m = ratio.qexp();
    if !m.is_integer() || !ratio.torsion().in_mu(f) {
        return Ok(None);
    }
    Ok(Some(*m.numer()))
}

/// Neither segment contains the other and their union is again a segment.
pub fn linked(reg: &Registry, a: &Segment, b: &Segment) -> Result<bool> {
    let Some(m) = line_offset(reg, a, b)? else {
        return Ok(false);
    };
    let (a0, a1) = (0_i64, i64::from(a.len) - 1);
    let (b0, b1) = (m, m + i64::from(b.len) - 1);
    let a_in_b = b0 <= a0 && a1 <= b1;
    let b_in_a = a0 <= b0 && b1 <= a1;
    let union_is_segment = b0 <= a1 + 1 && a0 <= b1 + 1;
    Ok(union_is_segment && !a_in_b && !b_in_a)
}

/// `ω_Δ(ϖ) = ω_ρ(ϖ)^ℓ · τ^{-rℓ} · q^{-rℓ(ℓ-1)/2}`.
pub fn central_char(reg: &Registry, d: &Segment) -> Result<Scalar> {
    let datum = reg.get(&d.label)?;
    let r = i64::from(datum.r);
    let l = i64::from(d.len);
    Ok(datum.omega.pow(l) * d.tau.pow(-r * l) * Scalar::q_pow(Rational::new(-r * l * (l - 1), 2)))
}

/// `Ind(Δ₁ ⊗ ⋯ ⊗ Δ_t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    segments: Vec<Segment>,
}

impl Representation {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::EmptyRepresentation);
        }
        Ok(Representation { segments })
    }

    /// Principal series `Ind(μ₁ ⊗ ⋯ ⊗ μ_m)` of unramified twists of the
    /// `GL_1` cuspidal `label`, given the Satake values `μ_i(ϖ)`.
    pub fn unramified(reg: &Registry, label: &str, satake: &[Scalar]) -> Result<Self> {
        let omega = reg.get(label)?.omega;
        Representation::new(
            satake
                .iter()
                .map(|a| Segment::new(label, 1, omega / *a))
                .collect(),
        )
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn into_segments(self) -> Vec<Segment> {
        self.segments
    }

    pub fn dim(&self, reg: &Registry) -> Result<u32> {
        self.segments.iter().map(|s| s.dim(reg)).sum()
    }

    /// `π^ι = Ind(Δ̃_t ⊗ ⋯ ⊗ Δ̃_1)`.
    pub fn dual(&self, reg: &Registry) -> Result<Representation> {
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|d| dual_segment(reg, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { segments })
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Stable sort by decreasing real center.
pub fn langlands_sort(p: &Representation) -> Representation {
    let mut segments = p.segments.clone();
    segments.sort_by_key(|d| std::cmp::Reverse(d.center()));
    Representation { segments }
}

/// No two segments are linked.
pub fn is_generic(reg: &Registry, p: &Representation) -> Result<bool> {
    pairwise_unlinked(reg, &p.segments).map(|bad| bad.is_none())
}

/// First linked pair, if any.
pub(crate) fn pairwise_unlinked(
    reg: &Registry,
    parts: &[Segment],
) -> Result<Option<(usize, usize)>> {
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if linked(reg, &parts[i], &parts[j])? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// One successive quotient `Ind(Δ₁^{(k₁)} ⊗ ⋯ ⊗ Δ_t^{(k_t)})` of a derivative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constituent {
    /// Surviving derived segments; fully derived ones are dropped.
    pub parts: Vec<Segment>,
    /// `(k₁, …, k_t)`.
    pub source: Vec<u32>,
}

impl Constituent {
    /// The whole representation as its own order-zero constituent.
    pub fn whole(p: &Representation) -> Self {
        Constituent {
            parts: p.segments.clone(),
            source: vec![0; p.segments.len()],
        }
    }

    pub fn dim(&self, reg: &Registry) -> Result<u32> {
        self.parts.iter().map(|s| s.dim(reg)).sum()
    }

    pub fn central_char(&self, reg: &Registry) -> Result<Scalar> {
        self.parts
            .iter()
            .try_fold(Scalar::one(), |acc, d| Ok(acc * central_char(reg, d)?))
    }
}

impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple: Vec<String> = self.source.iter().map(ToString::to_string).collect();
        write!(f, "({}) ", tuple.join(","))?;
        if self.parts.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" * "))
    }
}

/// All non-vanishing constituents of `π^{(k)}`, in lexicographic order of
/// `(k₁, …, k_t)`.
pub fn derivative_constituents(
    reg: &Registry,
    p: &Representation,
    k: u32,
) -> Result<Vec<Constituent>> {
    let ranks = p
        .segments
        .iter()
        .map(|d| reg.get(&d.label).map(|c| c.r))
        .collect::<Result<Vec<u32>>>()?;
    let total: u32 = p.segments.iter().zip(&ranks).map(|(d, r)| d.len * r).sum();
    if k > total {
        return Err(Error::OutOfRange { k, max: total });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(ranks.len());
    enumerate_steps(p, &ranks, 0, k, &mut steps, &mut |steps| {
        let mut parts = Vec::new();
        let mut source = Vec::with_capacity(steps.len());
        for ((d, r), a) in p.segments.iter().zip(&ranks).zip(steps) {
            source.push(a * r);
            if *a < d.len {
                parts.push(Segment::new(
                    d.label.clone(),
                    d.len - a,
                    d.tau * Scalar::q_int(i64::from(*a)),
                ));
            }
        }
        out.push(Constituent { parts, source });
    });
    Ok(out)
}

fn enumerate_steps(
    p: &Representation,
    ranks: &[u32],
    idx: usize,
    remaining: u32,
    steps: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if idx == ranks.len() {
        if remaining == 0 {
            emit(steps);
        }
        return;
    }
    let r = ranks[idx];
    for a in 0..=p.segments[idx].len {
        if a * r > remaining {
            break;
        }
        steps.push(a);
        enumerate_steps(p, ranks, idx + 1, remaining - a * r, steps, emit);
        steps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::q_pow(Rational::new(n, d))
    }

    fn seg(label: &str, len: u32, tau: Scalar) -> Segment {
        Segment::new(label, len, tau)
    }

    fn rep(segs: Vec<Segment>) -> Representation {
        Representation::new(segs).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let reg = Registry::standard();
        assert_eq!(
            derivative_segment(&reg, &seg("one", 3, q(-1, 1)), 1).unwrap(),
            Derived::Segment(seg("one", 2, Scalar::one()))
        );
        assert_eq!(
            derivative_segment(&reg, &seg("rho2", 2, Scalar::one()), 1).unwrap(),
            Derived::Vanished
        );
        assert_eq!(
            derivative_segment(&reg, &seg("rho2", 2, Scalar::one()), 4).unwrap(),
            Derived::Trivial
        );
        assert_eq!(
            derivative_segment(&reg, &seg("rho2", 2, Scalar::one()), 0).unwrap(),
            Derived::Segment(seg("rho2", 2, Scalar::one()))
        );
        assert!(matches!(
            derivative_segment(&reg, &seg("rho2", 2, Scalar::one()), 5),
            Err(Error::OutOfRange { k: 5, max: 4 })
        ));
    }

    #[test]
    fn dual_examples() {
        let reg = Registry::standard();
        let st = seg("one", 2, q(-1, 2));
        assert_eq!(dual_segment(&reg, &st).unwrap(), st);
        assert_eq!(
            dual_segment(&reg, &seg("chi", 1, Scalar::one())).unwrap(),
            seg("chi", 1, Scalar::root_of_unity(2, 3))
        );
        let d = seg("sigma", 3, q(1, 3));
        let dd = dual_segment(&reg, &dual_segment(&reg, &d).unwrap()).unwrap();
        assert_eq!(dd, d);
        assert_eq!(dual_segment(&reg, &d).unwrap().label, "sigma_dual");
    }

    #[test]
    fn linkage_examples() {
        let reg = Registry::standard();
        let one = Scalar::one();
        assert!(linked(&reg, &seg("one", 2, one), &seg("one", 2, q(1, 1))).unwrap());
        assert!(!linked(&reg, &seg("one", 3, one), &seg("one", 1, q(1, 1))).unwrap());
        assert!(!linked(&reg, &seg("one", 2, one), &seg("rho2", 2, one)).unwrap());
        // adjacency links, a gap does not
        assert!(linked(&reg, &seg("one", 1, one), &seg("one", 1, q(1, 1))).unwrap());
        assert!(!linked(&reg, &seg("one", 1, one), &seg("one", 1, q(2, 1))).unwrap());
        // equal segments are not linked
        assert!(!linked(&reg, &seg("one", 2, one), &seg("one", 2, one)).unwrap());
        // torsion outside μ_f separates lines
        let z2 = Scalar::root_of_unity(1, 2);
        assert!(!linked(&reg, &seg("one", 1, one), &seg("one", 1, z2 * q(1, 1))).unwrap());
        // rho2o has f = 2, so ζ₂ is a self-twist
        assert!(linked(&reg, &seg("rho2o", 1, one), &seg("rho2o", 1, z2 * q(1, 1))).unwrap());
    }

    #[test]
    fn central_char_examples() {
        let reg = Registry::standard();
        assert_eq!(
            central_char(&reg, &seg("one", 1, Scalar::one())).unwrap(),
            Scalar::one()
        );
        assert_eq!(
            central_char(&reg, &seg("one", 2, q(-1, 2))).unwrap(),
            Scalar::one()
        );
        assert_eq!(
            central_char(&reg, &seg("rho2o", 1, q(1, 1))).unwrap(),
            Scalar::root_of_unity(1, 2) * q(-2, 1)
        );
    }

    #[test]
    fn langlands_sort_examples() {
        let a = seg("one", 1, Scalar::one());
        let b = seg("one", 1, q(1, 1));
        let sorted = langlands_sort(&rep(vec![a.clone(), b.clone()]));
        assert_eq!(sorted.segments(), &[b.clone(), a.clone()]);
        assert_eq!(langlands_sort(&sorted), sorted);
        let c = seg("chi", 1, Scalar::one());
        let tie = langlands_sort(&rep(vec![c.clone(), a.clone()]));
        assert_eq!(tie.segments(), &[c, a]);
    }

    #[test]
    fn genericity_examples() {
        let reg = Registry::standard();
        let one = Scalar::one();
        assert!(is_generic(&reg, &rep(vec![seg("one", 2, one)])).unwrap());
        assert!(!is_generic(&reg, &rep(vec![seg("one", 2, one), seg("one", 2, q(1, 1))])).unwrap());
        assert!(is_generic(&reg, &rep(vec![seg("one", 2, one), seg("rho2", 1, one)])).unwrap());
    }

    #[test]
    fn constituent_examples() {
        let reg = Registry::standard();
        let cs = derivative_constituents(&reg, &rep(vec![seg("one", 2, q(-1, 2))]), 1).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].parts, vec![seg("one", 1, q(1, 2))]);
        assert_eq!(cs[0].source, vec![1]);

        let p = rep(vec![
            seg("one", 2, Scalar::one()),
            seg("chi", 1, Scalar::one()),
        ]);
        let cs = derivative_constituents(&reg, &p, 1).unwrap();
        let tuples: Vec<_> = cs.iter().map(|c| c.source.clone()).collect();
        assert_eq!(tuples, vec![vec![0, 1], vec![1, 0]]);

        let cs =
            derivative_constituents(&reg, &rep(vec![seg("rho2", 2, Scalar::one())]), 1).unwrap();
        assert!(cs.is_empty());

        assert!(derivative_constituents(&reg, &p, 4).is_err());
        let top = derivative_constituents(&reg, &p, 3).unwrap();
        assert_eq!(top.len(), 1);
        assert!(top[0].parts.is_empty());
    }

    #[test]
    fn empty_representation_rejected() {
        assert_eq!(Representation::new(vec![]), Err(Error::EmptyRepresentation));
    }

    #[test]
    fn unramified_builder_satake_values() {
        let reg = Registry::standard();
        let a = Scalar::root_of_unity(1, 12) * q(2, 1);
        let p = Representation::unramified(&reg, "one", &[a]).unwrap();
        assert_eq!(central_char(&reg, &p.segments()[0]).unwrap(), a);
    }
}
