//! Local exterior-square, symmetric-square and Rankin–Selberg factors, the
//! exceptional factors of derivative constituents, and the general-position
//! test that makes the derivative route computable.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::registry::Registry;
use crate::scalar::{EulerFactor, GammaClass, Scalar};
use crate::segment::{
    derivative_constituents, is_generic, langlands_sort, pairwise_unlinked, Constituent,
    Representation, Segment,
};

/// `L(s) ↦ L(s + k)`.
fn at(f: &EulerFactor, k: i64) -> EulerFactor {
    f.shift(Scalar::q_int(k))
}

/// `L(s, ρ_aν^{u_a} × ρ_bν^{u_b})` with `ta = q^{u_a}`, `tb = q^{u_b}`.
pub fn l_cusp_rs(reg: &Registry, a: &str, ta: Scalar, b: &str, tb: Scalar) -> Result<EulerFactor> {
    let c = (ta * tb).inv();
    Ok(EulerFactor::from_roots(
        reg.rs_pair_roots(a, b)?.into_iter().map(|x| x * c),
    ))
}

/// `L(s, ρν^u, ∧²)`, read off the declared Shalika set.
pub fn l_cusp_ext(reg: &Registry, a: &str, ta: Scalar) -> Result<EulerFactor> {
    let d = reg.get(a)?;
    if d.r % 2 == 1 {
        return Ok(EulerFactor::one());
    }
    let c = ta.pow(-2);
    Ok(EulerFactor::from_roots(d.shalika.iter().map(|x| *x * c)))
}

/// `L(s, ρν^u × ρν^u) / L(s, ρν^u, ∧²)`.
pub fn l_cusp_sym(reg: &Registry, a: &str, ta: Scalar) -> Result<EulerFactor> {
    l_cusp_rs(reg, a, ta, a, ta)?.divide(&l_cusp_ext(reg, a, ta)?)
}

/// `L(s, Δ_a × Δ_b) = ∏_{j<ℓ_b} L(s + ℓ_a - 1 + j, ρ_aν^{u_a} × ρ_bν^{u_b})`
/// with `ℓ_a ≥ ℓ_b`.
pub fn l_seg_rs(reg: &Registry, a: &Segment, b: &Segment) -> Result<EulerFactor> {
    let (a, b) = if a.len >= b.len { (a, b) } else { (b, a) };
    let base = l_cusp_rs(reg, &a.label, a.tau, &b.label, b.tau)?;
    if base.is_one() {
        return Ok(base);
    }
    let la = i64::from(a.len);
    let parts: Vec<EulerFactor> = (0..i64::from(b.len))
        .map(|j| at(&base, la - 1 + j))
        .collect();
    Ok(EulerFactor::product(&parts))
}

/// Product of `first` at the "odd" shifts and `second` at the "even" ones,
/// in the pattern shared by the ∧² and Sym² factors of a centered segment.
fn square_pattern(first: &EulerFactor, second: &EulerFactor, len: u32) -> EulerFactor {
    let l = i64::from(len);
    let mut parts = Vec::new();
    if l % 2 == 0 {
        for i in 0..l / 2 {
            parts.push(at(first, 2 * i + 1));
            parts.push(at(second, 2 * i));
        }
    } else {
        for i in 0..=(l - 1) / 2 {
            parts.push(at(second, 2 * i));
        }
        for i in 1..=(l - 1) / 2 {
            parts.push(at(first, 2 * i - 1));
        }
    }
    EulerFactor::product(&parts)
}

/// `L(s, Δ, ∧²)`.
pub fn l_seg_ext(reg: &Registry, d: &Segment) -> Result<EulerFactor> {
    let one = Scalar::one();
    let ext = l_cusp_ext(reg, &d.label, one)?;
    let sym = l_cusp_sym(reg, &d.label, one)?;
    let base = if d.len.is_multiple_of(2) {
        square_pattern(&ext, &sym, d.len)
    } else {
        square_pattern(&sym, &ext, d.len)
    };
    Ok(base.twist(d.center_shift()))
}

/// `L(s, Δ, Sym²)`.
pub fn l_seg_sym(reg: &Registry, d: &Segment) -> Result<EulerFactor> {
    let one = Scalar::one();
    let ext = l_cusp_ext(reg, &d.label, one)?;
    let sym = l_cusp_sym(reg, &d.label, one)?;
    let base = if d.len.is_multiple_of(2) {
        square_pattern(&sym, &ext, d.len)
    } else {
        square_pattern(&ext, &sym, d.len)
    };
    Ok(base.twist(d.center_shift()))
}

fn pair_products<F>(p: &Representation, single: F, reg: &Registry) -> Result<EulerFactor>
where
    F: Fn(&Registry, &Segment) -> Result<EulerFactor>,
{
    let sorted = langlands_sort(p);
    let segs = sorted.segments();
    let mut parts = Vec::new();
    for (i, a) in segs.iter().enumerate() {
        parts.push(single(reg, a)?);
        for b in &segs[i + 1..] {
            parts.push(l_seg_rs(reg, a, b)?);
        }
    }
    Ok(EulerFactor::product(&parts))
}

/// `L(s, π, ∧²)` computed on the Langlands-sorted induction.
pub fn l_rep_ext(reg: &Registry, p: &Representation) -> Result<EulerFactor> {
    pair_products(p, l_seg_ext, reg)
}

/// `L(s, π, Sym²)`.
pub fn l_rep_sym(reg: &Registry, p: &Representation) -> Result<EulerFactor> {
    pair_products(p, l_seg_sym, reg)
}

/// `L(s, π × π)`.
pub fn l_rep_rs(reg: &Registry, p: &Representation) -> Result<EulerFactor> {
    l_rep_rs_pair(reg, p, p)
}

/// `L(s, π × π′) = ∏_{i,j} L(s, Δ_i × Δ′_j)`.
pub fn l_rep_rs_pair(
    reg: &Registry,
    p: &Representation,
    p2: &Representation,
) -> Result<EulerFactor> {
    let mut parts = Vec::new();
    for a in p.segments() {
        for b in p2.segments() {
            parts.push(l_seg_rs(reg, a, b)?);
        }
    }
    Ok(EulerFactor::product(&parts))
}

/// Exceptional factor `L_ex(s, Δ, ∧²)` of an even-dimensional segment.
pub fn l_ex_segment(reg: &Registry, d: &Segment) -> Result<EulerFactor> {
    let r = reg.get(&d.label)?.r;
    let n = d.len * r;
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let one = Scalar::one();
    let base = if r % 2 == 0 && d.len % 2 == 1 {
        l_cusp_ext(reg, &d.label, one)?
    } else {
        l_cusp_sym(reg, &d.label, one)?
    };
    Ok(base.twist(d.center_shift()))
}

/// Exceptional poles of `L(s, Δ_a × Δ_b)`: the leading term
/// `L(s + ℓ - 1, ρ_aν^{u_a} × ρ_bν^{u_b})` when the lengths agree.
pub fn l_ex_rs_pair(reg: &Registry, a: &Segment, b: &Segment) -> Result<EulerFactor> {
    if a.len != b.len {
        return Ok(EulerFactor::one());
    }
    let base = l_cusp_rs(reg, &a.label, a.tau, &b.label, b.tau)?;
    Ok(at(&base, i64::from(a.len) - 1))
}

/// An involution of `0..n` as its orbits: singletons and pairs.
type Orbits = [(usize, Option<usize>)];

/// Calls `visit` with every involution of `0..n`.
fn for_each_involution(n: usize, visit: &mut dyn FnMut(&Orbits)) {
    fn go(
        free: &mut Vec<usize>,
        orbits: &mut Vec<(usize, Option<usize>)>,
        visit: &mut dyn FnMut(&Orbits),
    ) {
        let Some(&i) = free.first() else {
            visit(orbits);
            return;
        };
        free.remove(0);
        orbits.push((i, None));
        go(free, orbits, visit);
        orbits.pop();
        for pos in 0..free.len() {
            let j = free.remove(pos);
            orbits.push((i, Some(j)));
            go(free, orbits, visit);
            orbits.pop();
            free.insert(pos, j);
        }
        free.insert(0, i);
    }
    let mut free: Vec<usize> = (0..n).collect();
    go(&mut free, &mut Vec::new(), visit);
}

/// `L_ex(s, Ind(Δ₁ ⊗ ⋯ ⊗ Δ_t), ∧²)` of an irreducible generic constituent:
/// an involution `σ` pairs `Δ_i` with `Δ_{σ(i)}` in a Shalika-type
/// functional, and `α` is a pole when every orbit admits it.
pub fn l_ex_constituent(reg: &Registry, c: &Constituent) -> Result<EulerFactor> {
    let dim = c.dim(reg)?;
    if dim % 2 == 1 {
        return Err(Error::OddDimension(dim));
    }
    if let Some((i, j)) = pairwise_unlinked(reg, &c.parts)? {
        return Err(Error::LinkedParts(Box::new((
            c.parts[i].clone(),
            c.parts[j].clone(),
        ))));
    }
    let t = c.parts.len();
    if t == 0 {
        return Ok(EulerFactor::one());
    }
    let mut singles = Vec::with_capacity(t);
    for d in &c.parts {
        let set: BTreeSet<Scalar> = if d.dim(reg)? % 2 == 0 {
            l_ex_segment(reg, d)?.distinct().into_iter().collect()
        } else {
            BTreeSet::new()
        };
        singles.push(set);
    }
    let mut pairs = vec![vec![BTreeSet::new(); t]; t];
    for (i, row) in pairs.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().skip(i + 1) {
            *cell = l_ex_rs_pair(reg, &c.parts[i], &c.parts[j])?
                .distinct()
                .into_iter()
                .collect();
        }
    }
    let mut poles: BTreeSet<Scalar> = BTreeSet::new();
    for_each_involution(t, &mut |orbits| {
        let mut acc: Option<BTreeSet<Scalar>> = None;
        for &(i, j) in orbits {
            let set = match j {
                None => &singles[i],
                Some(j) => &pairs[i.min(j)][i.max(j)],
            };
            acc = Some(match acc {
                None => set.clone(),
                Some(a) => a.intersection(set).copied().collect(),
            });
            if acc.as_ref().is_some_and(BTreeSet::is_empty) {
                return;
            }
        }
        poles.extend(acc.unwrap_or_default());
    });
    Ok(EulerFactor::from_roots(poles))
}

/// `L(s, π, ∧²)` as the lcm of exceptional factors over the derivatives
/// `π^{(k)}` with `k ≡ m (mod 2)`, `k ≤ m - 2`.
pub fn l_ext_via_derivatives(reg: &Registry, p: &Representation) -> Result<EulerFactor> {
    if !is_generic(reg, p)? {
        return Err(Error::NotGeneric);
    }
    let report = check_general_position(reg, p)?;
    if !report.ok {
        return Err(Error::NotGeneralPosition(report));
    }
    let m = p.dim(reg)?;
    let mut factors = Vec::new();
    let mut k = m % 2;
    while k + 2 <= m {
        for c in derivative_constituents(reg, p, k)? {
            factors.push(l_ex_constituent(reg, &c)?);
        }
        k += 2;
    }
    Ok(EulerFactor::lcm(&factors))
}

/// `γ(s, π, ∧², ψ)` up to units: `L(1 - s, π^ι, ∧²) / L(s, π, ∧²)`.
pub fn gamma_ext(reg: &Registry, p: &Representation) -> Result<GammaClass> {
    let dual = p.dual(reg)?;
    Ok(GammaClass::normalize(
        &l_rep_ext(reg, &dual)?,
        &l_rep_ext(reg, p)?,
    ))
}

/// The γ-class assembled from the segments: `∏_k γ(s, Δ_k, ∧²)` times
/// `∏_{i<j} γ(s, Δ_i × Δ_j)`.
pub fn gamma_ext_by_parts(reg: &Registry, p: &Representation) -> Result<GammaClass> {
    let segs = p.segments();
    let duals = segs
        .iter()
        .map(|d| crate::segment::dual_segment(reg, d))
        .collect::<Result<Vec<_>>>()?;
    let mut parts = Vec::new();
    for i in 0..segs.len() {
        parts.push(GammaClass::normalize(
            &l_seg_ext(reg, &duals[i])?,
            &l_seg_ext(reg, &segs[i])?,
        ));
        for j in i + 1..segs.len() {
            parts.push(GammaClass::normalize(
                &l_seg_rs(reg, &duals[i], &duals[j])?,
                &l_seg_rs(reg, &segs[i], &segs[j])?,
            ));
        }
    }
    Ok(GammaClass::product(&parts))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Which of conditions (1)–(5) failed.
    pub condition: u8,
    pub description: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.condition, self.description)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPositionReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl GeneralPositionReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        GeneralPositionReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn conditions(&self) -> BTreeSet<u8> {
        self.violations.iter().map(|v| v.condition).collect()
    }
}

impl fmt::Display for GeneralPositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        let lines: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&lines.join("; "))
    }
}

/// Conditions (1)–(5) of general position, evaluated on the undeformed data.
pub fn check_general_position(reg: &Registry, p: &Representation) -> Result<GeneralPositionReport> {
    let mut violations = Vec::new();
    let mut push = |condition: u8, description: String| {
        violations.push(Violation {
            condition,
            description,
        })
    };
    let m = p.dim(reg)?;
    for k in 0..=m {
        let cons = derivative_constituents(reg, p, k)?;
        let mut chars = Vec::with_capacity(cons.len());
        for c in &cons {
            if let Some((i, j)) = pairwise_unlinked(reg, &c.parts)? {
                push(
                    1,
                    format!(
                        "order {k}: constituent {c} has linked parts {} and {}",
                        c.parts[i], c.parts[j]
                    ),
                );
            }
            chars.push(c.central_char(reg)?);
        }
        for i in 0..cons.len() {
            for j in i + 1..cons.len() {
                if chars[i] == chars[j] {
                    push(
                        2,
                        format!(
                            "order {k}: constituents {} and {} share central character {}",
                            cons[i], cons[j], chars[i]
                        ),
                    );
                }
            }
        }
    }

    let segs = p.segments();
    let exts = segs
        .iter()
        .map(|d| l_seg_ext(reg, d))
        .collect::<Result<Vec<_>>>()?;
    let mut rs = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            rs.push(((i, j), l_seg_rs(reg, &segs[i], &segs[j])?));
        }
    }
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if !exts[i].is_disjoint(&exts[j]) {
                push(
                    3,
                    format!(
                        "L(s, {}, ∧²) and L(s, {}, ∧²) share a pole",
                        segs[i], segs[j]
                    ),
                );
            }
        }
    }
    for (x, ((i, j), fx)) in rs.iter().enumerate() {
        for ((k, l), fy) in &rs[x + 1..] {
            if !fx.is_disjoint(fy) {
                push(
                    4,
                    format!(
                        "L(s, {} × {}) and L(s, {} × {}) share a pole",
                        segs[*i], segs[*j], segs[*k], segs[*l]
                    ),
                );
            }
        }
    }
    for ((i, j), f) in &rs {
        for (k, e) in exts.iter().enumerate() {
            if !f.is_disjoint(e) {
                push(
                    5,
                    format!(
                        "L(s, {} × {}) and L(s, {}, ∧²) share a pole",
                        segs[*i], segs[*j], segs[k]
                    ),
                );
            }
        }
    }
    Ok(GeneralPositionReport::from_violations(violations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::q_pow(Rational::new(n, d))
    }

    fn ef(roots: &[Scalar]) -> EulerFactor {
        EulerFactor::from_roots(roots.iter().copied())
    }

    fn seg(label: &str, len: u32, tau: Scalar) -> Segment {
        Segment::new(label, len, tau)
    }

    fn rep(segs: Vec<Segment>) -> Representation {
        Representation::new(segs).unwrap()
    }

    fn st(len: u32) -> Segment {
        seg("one", len, q(1 - i64::from(len), 2))
    }

    #[test]
    fn cuspidal_factors() {
        let reg = Registry::standard();
        let one = Scalar::one();
        assert_eq!(l_cusp_rs(&reg, "one", one, "one", one).unwrap(), ef(&[one]));
        assert_eq!(
            l_cusp_rs(&reg, "one", q(1, 2), "one", q(1, 2)).unwrap(),
            ef(&[q(-1, 1)])
        );
        assert!(l_cusp_rs(&reg, "one", one, "rho2", one).unwrap().is_one());

        assert!(l_cusp_ext(&reg, "rho3", one).unwrap().is_one());
        assert_eq!(l_cusp_ext(&reg, "rho2", one).unwrap(), ef(&[one]));
        assert_eq!(l_cusp_ext(&reg, "rho2", q(1, 2)).unwrap(), ef(&[q(-1, 1)]));

        assert_eq!(l_cusp_sym(&reg, "one", one).unwrap(), ef(&[one]));
        assert!(l_cusp_sym(&reg, "rho2", one).unwrap().is_one());
        assert_eq!(l_cusp_sym(&reg, "rho2o", one).unwrap(), ef(&[one]));
        assert!(matches!(
            l_cusp_ext(&reg, "nope", one),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn segment_rs() {
        let reg = Registry::standard();
        let one = Scalar::one();
        assert_eq!(
            l_seg_rs(&reg, &st(2), &st(2)).unwrap(),
            ef(&[one, q(-1, 1)])
        );
        assert!(l_seg_rs(&reg, &seg("one", 1, one), &seg("rho2", 1, one))
            .unwrap()
            .is_one());
        assert_eq!(
            l_seg_rs(&reg, &seg("one", 2, one), &seg("one", 1, one)).unwrap(),
            ef(&[q(-1, 1)])
        );
        assert_eq!(
            l_seg_rs(&reg, &seg("one", 1, one), &seg("one", 2, one)).unwrap(),
            ef(&[q(-1, 1)])
        );
    }

    #[test]
    fn segment_squares() {
        let reg = Registry::standard();
        let one = Scalar::one();
        assert_eq!(l_seg_ext(&reg, &st(2)).unwrap(), ef(&[one]));
        assert_eq!(l_seg_ext(&reg, &st(3)).unwrap(), ef(&[q(-1, 1)]));
        assert_eq!(
            l_seg_ext(&reg, &seg("rho2", 2, q(-1, 2))).unwrap(),
            ef(&[q(-1, 1)])
        );

        assert_eq!(l_seg_sym(&reg, &st(2)).unwrap(), ef(&[q(-1, 1)]));
        assert_eq!(l_seg_sym(&reg, &seg("one", 1, one)).unwrap(), ef(&[one]));
        // RS = ∧² · Sym² forces the Sym² factor of this segment to be q^{-1}
        let d = seg("rho3", 2, q(-1, 2));
        assert_eq!(l_seg_sym(&reg, &d).unwrap(), ef(&[q(-1, 1)]));
        assert_eq!(
            l_seg_rs(&reg, &d, &d).unwrap(),
            l_seg_ext(&reg, &d)
                .unwrap()
                .mul(&l_seg_sym(&reg, &d).unwrap())
        );
    }

    #[test]
    fn representation_factors() {
        let reg = Registry::standard();
        let (a1, a2) = (
            Scalar::root_of_unity(1, 12) * q(1, 1),
            Scalar::root_of_unity(5, 6),
        );
        let p = Representation::unramified(&reg, "one", &[a1, a2]).unwrap();
        assert_eq!(l_rep_ext(&reg, &p).unwrap(), ef(&[a1 * a2]));
        assert_eq!(
            l_rep_sym(&reg, &p).unwrap(),
            ef(&[a1 * a1, a2 * a2, a1 * a2])
        );
        assert_eq!(
            l_rep_rs(&reg, &p).unwrap(),
            ef(&[a1 * a1, a2 * a2, a1 * a2, a1 * a2])
        );

        let mixed = rep(vec![st(2), seg("rho2", 1, Scalar::one())]);
        assert_eq!(
            l_rep_ext(&reg, &mixed).unwrap(),
            ef(&[Scalar::one(), Scalar::one()])
        );

        let st2 = rep(vec![st(2)]);
        assert_eq!(l_rep_sym(&reg, &st2).unwrap(), ef(&[q(-1, 1)]));
        assert_eq!(
            l_rep_rs(&reg, &st2).unwrap(),
            ef(&[Scalar::one(), q(-1, 1)])
        );
    }

    #[test]
    fn exceptional_segment() {
        let reg = Registry::standard();
        assert_eq!(l_ex_segment(&reg, &st(2)).unwrap(), ef(&[Scalar::one()]));
        assert_eq!(
            l_ex_segment(&reg, &seg("rho2", 1, Scalar::one())).unwrap(),
            ef(&[Scalar::one()])
        );
        assert_eq!(l_ex_segment(&reg, &st(3)), Err(Error::OddDimension(3)));
    }

    #[test]
    fn exceptional_constituent() {
        let reg = Registry::standard();
        let one = Scalar::one();
        let single = Constituent {
            parts: vec![st(2)],
            source: vec![0],
        };
        assert_eq!(l_ex_constituent(&reg, &single).unwrap(), ef(&[one]));

        let apart = Constituent {
            parts: vec![seg("one", 1, one), seg("rho3", 1, one)],
            source: vec![0, 0],
        };
        assert!(l_ex_constituent(&reg, &apart).unwrap().is_one());

        // Δ with its own contragredient is linked
        let d = seg("one", 2, one);
        let dd = crate::segment::dual_segment(&reg, &d).unwrap();
        let linked = Constituent {
            parts: vec![d.clone(), dd],
            source: vec![0, 0],
        };
        assert!(matches!(
            l_ex_constituent(&reg, &linked),
            Err(Error::LinkedParts(_))
        ));

        // only the swap contributes: {q^-1} ∩ {q^-2} is empty
        let pair = Constituent {
            parts: vec![d, seg("one", 2, q(1, 2))],
            source: vec![0, 0],
        };
        assert_eq!(l_ex_constituent(&reg, &pair).unwrap(), ef(&[q(-3, 2)]));

        let odd = Constituent {
            parts: vec![seg("one", 1, one)],
            source: vec![0],
        };
        assert_eq!(l_ex_constituent(&reg, &odd), Err(Error::OddDimension(1)));
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (0..7)
            .map(|n| {
                let mut c = 0;
                for_each_involution(n, &mut |_| c += 1);
                c
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn derivative_route() {
        let reg = Registry::standard();
        assert_eq!(
            l_ext_via_derivatives(&reg, &rep(vec![st(2)])).unwrap(),
            ef(&[Scalar::one()])
        );
        assert_eq!(
            l_ext_via_derivatives(&reg, &rep(vec![st(3)])).unwrap(),
            ef(&[q(-1, 1)])
        );
        let (a1, a2) = (q(1, 3), Scalar::root_of_unity(1, 4));
        let p = Representation::unramified(&reg, "one", &[a1, a2]).unwrap();
        assert_eq!(l_ext_via_derivatives(&reg, &p).unwrap(), ef(&[a1 * a2]));
        assert_eq!(l_ext_via_derivatives(&reg, &p), l_rep_ext(&reg, &p));

        let linked = rep(vec![seg("one", 1, Scalar::one()), seg("one", 1, q(1, 1))]);
        assert_eq!(l_ext_via_derivatives(&reg, &linked), Err(Error::NotGeneric));
        let equal = rep(vec![
            seg("one", 1, Scalar::one()),
            seg("one", 1, Scalar::one()),
        ]);
        assert!(matches!(
            l_ext_via_derivatives(&reg, &equal),
            Err(Error::NotGeneralPosition(_))
        ));
    }

    #[test]
    fn gamma_classes() {
        let reg = Registry::standard();
        let g = gamma_ext(&reg, &rep(vec![st(2)])).unwrap();
        assert_eq!((g.num(), g.den()), (&ef(&[q(1, 1)]), &ef(&[Scalar::one()])));
        assert!(gamma_ext(&reg, &rep(vec![seg("chi", 1, q(2, 3))]))
            .unwrap()
            .is_trivial());
        let p = rep(vec![
            st(2),
            seg("sigma", 1, q(1, 5)),
            seg("chi", 3, Scalar::root_of_unity(1, 3)),
        ]);
        assert_eq!(gamma_ext(&reg, &p), gamma_ext_by_parts(&reg, &p));
    }

    #[test]
    fn general_position_examples() {
        let reg = Registry::standard();
        let one = Scalar::one();
        assert!(check_general_position(&reg, &rep(vec![st(3)])).unwrap().ok);

        let equal =
            check_general_position(&reg, &rep(vec![seg("one", 1, one), seg("one", 1, one)]))
                .unwrap();
        assert!(!equal.ok);
        assert!(equal.conditions().contains(&2));

        let fine = rep(vec![seg("one", 1, one), seg("one", 1, q(1, 3))]);
        let report = check_general_position(&reg, &fine).unwrap();
        assert!(report.ok, "{report}");
        assert_eq!(report.to_string(), "ok");

        let linked = rep(vec![seg("one", 1, one), seg("one", 1, q(1, 1))]);
        assert!(check_general_position(&reg, &linked)
            .unwrap()
            .conditions()
            .contains(&1));

        // two copies of rho2 at the same twist share their Shalika pole
        let twins = rep(vec![seg("rho2", 1, one), seg("rho2", 1, one)]);
        let report = check_general_position(&reg, &twins).unwrap();
        assert!(report.conditions().contains(&3));
    }
}
