//! Flat and restricted weights, Steinberg decomposition `λ = λ_0 + pλ_1 + ⋯`,
//! and the character ring `Z[X(T)]` with Frobenius twists.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::lattice::{check_rank, pair, Coweight, Weight};
use crate::liesuper::{check_admissible_base, AdmissibleBase, GenerationSemantics, LieFamily, LieSuperAlgebra};
use crate::rootdata::{check_level, check_odd_prime, positive_system, OrderFunctional, SuperRootDatum};
use crate::{Error, Result};

/// `<λ, α^∨> ≥ 0` for every positive even root.
pub fn is_dominant(d: &SuperRootDatum, u: &OrderFunctional, lambda: &Weight) -> Result<bool> {
    check_rank(d.rank(), lambda.rank())?;
    let ps = positive_system(d, u)?;
    for a in &ps.even_pos {
        let cov = d.coroot(a).expect("positive root comes from the datum");
        if pair(lambda, cov)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of `λ` in `X(T)^♭` for the standard torus and order.
///
/// For `Q(n)`: `c_1 ≥ ⋯ ≥ c_n`, and `p | c_i` whenever `c_i = c_{i+1}`
/// (with `p = 0` this forces `c_i = 0`). For `GL(m|n)` flatness is taken to be
/// dominance, i.e. weakly decreasing within each block. `P(n)` is unsupported.
pub fn is_flat(family: LieFamily, p: u64, lambda: &Weight) -> Result<bool> {
    check_rank(family.rank(), lambda.rank())?;
    if p != 0 {
        check_odd_prime(p)?;
    }
    let c = lambda.coords();
    match family {
        LieFamily::Queer { .. } => {
            let pb = BigInt::from(p);
            Ok(c.windows(2).all(|w| {
                w[0] > w[1] || (w[0] == w[1] && if p == 0 { w[0].is_zero() } else { w[0].is_multiple_of(&pb) })
            }))
        }
        LieFamily::Gl { m, .. } => {
            let (a, b) = c.split_at(m);
            Ok(a.windows(2).all(|w| w[0] >= w[1]) && b.windows(2).all(|w| w[0] >= w[1]))
        }
        LieFamily::Periplectic { .. } => {
            Err(Error::Unsupported(format!("no flatness criterion is implemented for {family}")))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootClass {
    /// `α ∈ Ψ_even \ Ψ_odd`.
    EvenOnly,
    /// `α ∈ Ψ_even ∩ Ψ_odd`.
    Shared,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBound {
    pub alpha: Weight,
    pub class: RootClass,
    /// `<λ, α^∨>`.
    pub pairing: BigInt,
    /// `λ([K_α, K_α])` for shared roots.
    pub kform_value: Option<BigInt>,
    pub bound: BigInt,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionReport {
    pub weight: Weight,
    pub p: u64,
    pub r: u32,
    pub flat: bool,
    /// Set when flatness could only be checked as dominance.
    pub weakened: bool,
    pub per_root: Vec<RootBound>,
    pub verdict: bool,
}

#[derive(Clone, Debug)]
struct SimpleRoot {
    alpha: Weight,
    coroot: Coweight,
    /// Torus coordinates of `[K_α, K_α]` for shared roots.
    kk: Option<Vec<i64>>,
}

/// A datum with a validated admissible base, ready for restriction checks.
///
/// The admissibility check and the brackets `[K_α, K_α]` are computed once.
#[derive(Clone, Debug)]
pub struct RestrictionContext {
    datum: SuperRootDatum,
    order: OrderFunctional,
    base: AdmissibleBase,
    family: Option<LieFamily>,
    simple: Vec<SimpleRoot>,
}

impl RestrictionContext {
    /// Fails with [`Error::Precondition`] unless `base` is admissible for
    /// `(lie, datum, order)` under the default generation semantics.
    pub fn new(
        datum: &SuperRootDatum,
        lie: &LieSuperAlgebra,
        order: &OrderFunctional,
        base: &AdmissibleBase,
    ) -> Result<Self> {
        let report = check_admissible_base(lie, datum, order, base, GenerationSemantics::default())?;
        if !report.ok {
            return Err(Error::Precondition(String::from("the given base is not admissible")));
        }
        let mut simple = Vec::new();
        for a in &base.psi_even {
            let coroot = datum.coroot(a).expect("simple roots are roots").clone();
            let kk = if base.psi_odd.contains(a) {
                let k = lie.k_alpha(a)?;
                Some(lie.cartan_coords(&lie.bracket(&k, &k)?)?)
            } else {
                None
            };
            simple.push(SimpleRoot { alpha: a.clone(), coroot, kk });
        }
        let family = datum.lie_handle().filter(|f| *f == lie.family());
        Ok(RestrictionContext { datum: datum.clone(), order: order.clone(), base: base.clone(), family, simple })
    }

    /// The context for a built-in family with its standard order and base.
    pub fn standard(family: LieFamily) -> Result<Self> {
        let lie = family.algebra()?;
        Self::new(&family.datum()?, &lie, &family.standard_order(), &family.standard_base()?)
    }

    pub fn datum(&self) -> &SuperRootDatum {
        &self.datum
    }

    pub fn order(&self) -> &OrderFunctional {
        &self.order
    }

    pub fn base(&self) -> &AdmissibleBase {
        &self.base
    }

    /// Flatness where a criterion exists, otherwise dominance. The flag is
    /// `true` in the second case.
    pub fn flatness(&self, p: u64, lambda: &Weight) -> Result<(bool, bool)> {
        match self.family {
            Some(f @ (LieFamily::Gl { .. } | LieFamily::Queer { .. })) => Ok((is_flat(f, p, lambda)?, false)),
            _ => Ok((is_dominant(&self.datum, &self.order, lambda)?, true)),
        }
    }

    /// Whether `λ` is `p^r`-restricted: flat, and for each simple even root
    /// `<λ, α^∨> ≤ p^r - 1`, relaxed to `≤ p^r` on shared roots with
    /// `p ∤ λ([K_α, K_α])`.
    pub fn is_restricted(&self, lambda: &Weight, p: u64, r: u32) -> Result<RestrictionReport> {
        check_rank(self.datum.rank(), lambda.rank())?;
        check_odd_prime(p)?;
        check_level(r)?;
        let (flat, weakened) = self.flatness(p, lambda)?;
        let pr = BigInt::from(p).pow(r);
        let pb = BigInt::from(p);
        let mut per_root = Vec::new();
        for s in &self.simple {
            let pairing = pair(lambda, &s.coroot)?;
            let (class, kform_value, bound) = match &s.kk {
                None => (RootClass::EvenOnly, None, &pr - 1),
                Some(kk) => {
                    let v: BigInt = lambda.coords().iter().zip(kk).map(|(l, &x)| l * BigInt::from(x)).sum();
                    let bound = if v.is_multiple_of(&pb) { &pr - 1 } else { pr.clone() };
                    (RootClass::Shared, Some(v), bound)
                }
            };
            let ok = pairing <= bound;
            per_root.push(RootBound { alpha: s.alpha.clone(), class, pairing, kform_value, bound, ok });
        }
        let verdict = flat && per_root.iter().all(|b| b.ok);
        Ok(RestrictionReport { weight: lambda.clone(), p, r, flat, weakened, per_root, verdict })
    }

    /// Writes `λ = λ_0 + pλ_1 + ⋯ + p^m λ_m` with every `λ_i` 1-restricted.
    ///
    /// A remainder whose coordinates all lie in `(-p, p)` and which is itself
    /// restricted becomes the last digit. Otherwise the digit `λ_i` runs over
    /// the lifts `(λ mod p) + p·k`, `k ∈ [-R, R]^l`, ordered by `max|k_j|` and
    /// then lexicographically in `k`, subject to `λ_i` restricted and the
    /// remainder `(λ - λ_i)/p` flat. The first complete sequence found
    /// depth-first is returned; if none exists, a restricted remainder is
    /// taken whole as the last digit. Trailing zeros never occur.
    pub fn steinberg_decompose(&self, lambda: &Weight, p: u64, opts: &SearchOptions) -> Result<Vec<Weight>> {
        check_rank(self.datum.rank(), lambda.rank())?;
        check_odd_prime(p)?;
        if !self.flatness(p, lambda)?.0 {
            return Err(Error::Precondition(format!("{lambda} is not flat")));
        }
        let mut search = Search {
            ctx: self,
            p,
            lifts: lift_offsets(lambda.rank(), opts.radius),
            max_digits: opts.max_digits,
            failed: BTreeSet::new(),
            path: Vec::new(),
        };
        match search.run(lambda, 0)? {
            Some(mut digits) => {
                digits.reverse();
                Ok(digits)
            }
            None => Err(Error::DecompositionFailed {
                weight: lambda.clone(),
                frontier: search.failed.into_iter().collect(),
            }),
        }
    }
}

/// Tuning for [`RestrictionContext::steinberg_decompose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// The box radius `R` for digit lifts.
    pub radius: u32,
    /// Maximal number of digits.
    pub max_digits: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { radius: 2, max_digits: 64 }
    }
}

fn lift_offsets(rank: usize, radius: u32) -> Vec<Vec<i64>> {
    let r = i64::from(radius);
    let mut out: Vec<Vec<i64>> = alloc::vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.sort_by(|a, b| {
        let ma = a.iter().map(|x| x.abs()).max().unwrap_or(0);
        let mb = b.iter().map(|x| x.abs()).max().unwrap_or(0);
        ma.cmp(&mb).then_with(|| a.cmp(b))
    });
    out
}

struct Search<'a> {
    ctx: &'a RestrictionContext,
    p: u64,
    lifts: Vec<Vec<i64>>,
    max_digits: usize,
    failed: BTreeSet<Weight>,
    path: Vec<Weight>,
}

impl Search<'_> {
    /// Digits of `lambda` in reverse order, or `None`.
    fn run(&mut self, lambda: &Weight, depth: usize) -> Result<Option<Vec<Weight>>> {
        if lambda.is_zero() {
            return Ok(Some(Vec::new()));
        }
        if depth >= self.max_digits || self.failed.contains(lambda) || self.path.contains(lambda) {
            return Ok(None);
        }
        let pb = BigInt::from(self.p);
        let in_window = lambda.coords().iter().all(|c| c.abs() < pb);
        if in_window && self.ctx.is_restricted(lambda, self.p, 1)?.verdict {
            return Ok(Some(alloc::vec![lambda.clone()]));
        }
        let residue: Vec<BigInt> = lambda.coords().iter().map(|c| c.mod_floor(&pb)).collect();
        self.path.push(lambda.clone());
        for k in self.lifts.clone() {
            let digit = Weight::new(residue.iter().zip(&k).map(|(r, &k)| r + &pb * BigInt::from(k)).collect());
            if !self.ctx.is_restricted(&digit, self.p, 1)?.verdict {
                continue;
            }
            let rest = Weight::new((lambda - &digit).into_coords().into_iter().map(|c| c / &pb).collect());
            if !self.ctx.flatness(self.p, &rest)?.0 {
                continue;
            }
            if let Some(mut tail) = self.run(&rest, depth + 1)? {
                self.path.pop();
                tail.push(digit);
                return Ok(Some(tail));
            }
        }
        self.path.pop();
        if !in_window && self.ctx.is_restricted(lambda, self.p, 1)?.verdict {
            return Ok(Some(alloc::vec![lambda.clone()]));
        }
        self.failed.insert(lambda.clone());
        Ok(None)
    }
}

/// Free-function form of [`RestrictionContext::is_restricted`].
#[allow(clippy::too_many_arguments)]
pub fn is_restricted(
    d: &SuperRootDatum,
    lie: &LieSuperAlgebra,
    u: &OrderFunctional,
    base: &AdmissibleBase,
    lambda: &Weight,
    p: u64,
    r: u32,
) -> Result<RestrictionReport> {
    RestrictionContext::new(d, lie, u, base)?.is_restricted(lambda, p, r)
}

/// A finitely supported function `X(T) → Z`, written `Σ m_λ e^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterElement {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl CharacterElement {
    pub fn zero(rank: usize) -> Self {
        CharacterElement { rank, terms: BTreeMap::new() }
    }

    /// `e^0`.
    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), BigInt::one())
    }

    pub fn monomial(weight: Weight, mult: BigInt) -> Self {
        let mut c = Self::zero(weight.rank());
        c.add_term(weight, mult);
        c
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, BigInt)>) -> Result<Self> {
        let mut c = Self::zero(rank);
        for (w, m) in terms {
            check_rank(rank, w.rank())?;
            c.add_term(w, m);
        }
        Ok(c)
    }

    fn add_term(&mut self, weight: Weight, mult: BigInt) {
        let v = self.terms.entry(weight.clone()).or_insert_with(BigInt::zero);
        *v += mult;
        if v.is_zero() {
            self.terms.remove(&weight);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Terms in lexicographic order of weights; no zero multiplicities.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Weight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Sum of all multiplicities (the dimension, for a genuine character).
    pub fn total_dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_term(w.clone(), m.clone());
        }
        Ok(out)
    }

    /// Convolution: `e^λ · e^μ = e^{λ+μ}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = Self::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        Ok(out)
    }

    /// `e^λ ↦ e^{p^r λ}`.
    pub fn frobenius_twist(&self, p: u64, r: u32) -> Self {
        let f = BigInt::from(p).pow(r);
        CharacterElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, m)| (w.scale(&f), m.clone())).collect(),
        }
    }

    /// The term with the largest `Υ`-value, if it is unique.
    pub fn max_term(&self, u: &OrderFunctional) -> Result<Option<(Weight, BigInt)>> {
        check_rank(self.rank, u.rank())?;
        let mut best: Option<(num_rational::BigRational, &Weight, &BigInt)> = None;
        let mut tied = false;
        for (w, m) in &self.terms {
            let v = u.eval(w);
            match &best {
                Some((bv, _, _)) if v < *bv => {}
                Some((bv, _, _)) if v == *bv => tied = true,
                _ => {
                    best = Some((v, w, m));
                    tied = false;
                }
            }
        }
        Ok(match best {
            Some((_, w, m)) if !tied => Some((w.clone(), m.clone())),
            _ => None,
        })
    }
}

/// `Π_i ch_i^{[i]}`: the character of `L(λ_0) ⊗ L(λ_1)^{[1]} ⊗ ⋯` from the
/// characters of its factors.
pub fn steinberg_character(factors: &[CharacterElement], p: u64) -> Result<CharacterElement> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidParameter(String::from("at least one factor is required")));
    };
    let mut out = CharacterElement::one(first.rank());
    for (i, ch) in factors.iter().enumerate() {
        let r = u32::try_from(i).map_err(|_| Error::InvalidParameter(String::from("too many factors")))?;
        out = out.mul(&ch.frobenius_twist(p, r))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_gl, build_q};
    use alloc::vec;
    use proptest::prelude::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_i64s(c)
    }

    const Q2: LieFamily = LieFamily::Queer { n: 2 };
    const GL11: LieFamily = LieFamily::Gl { m: 1, n: 1 };
    const GL21: LieFamily = LieFamily::Gl { m: 2, n: 1 };

    #[test]
    fn dominance_examples() {
        let d = build_gl(2, 1).unwrap();
        assert!(is_dominant(&d, &OrderFunctional::descending(3), &w(&[3, 1, -5])).unwrap());
        assert!(is_dominant(&d, &OrderFunctional::descending(3), &w(&[0, 0, 0])).unwrap());
        let q = build_q(2).unwrap();
        assert!(!is_dominant(&q, &OrderFunctional::descending(2), &w(&[-1, 0])).unwrap());
    }

    #[test]
    fn flatness_examples() {
        assert!(is_flat(Q2, 3, &w(&[1, -2])).unwrap());
        assert!(!is_flat(Q2, 3, &w(&[1, 1])).unwrap());
        assert!(is_flat(LieFamily::Queer { n: 3 }, 3, &w(&[3, 3, 0])).unwrap());
        assert!(is_flat(Q2, 0, &w(&[0, 0])).unwrap());
        assert!(!is_flat(Q2, 0, &w(&[3, 3])).unwrap());
        assert!(is_flat(GL21, 3, &w(&[2, 2, 9])).unwrap());
        assert!(!is_flat(GL21, 3, &w(&[1, 2, 0])).unwrap());
        assert!(matches!(is_flat(LieFamily::Periplectic { n: 2 }, 3, &w(&[0, 0])), Err(Error::Unsupported(_))));
        assert!(is_flat(Q2, 4, &w(&[1, 0])).is_err());
    }

    #[test]
    fn restricted_examples() {
        let ctx = RestrictionContext::standard(Q2).unwrap();
        let rep = ctx.is_restricted(&w(&[1, -2]), 3, 2).unwrap();
        assert!(rep.verdict && !rep.weakened);
        assert_eq!(rep.per_root.len(), 1);
        let b = &rep.per_root[0];
        assert_eq!(b.class, RootClass::Shared);
        assert_eq!(b.pairing, BigInt::from(3));
        assert_eq!(b.kform_value, Some(BigInt::from(-2)));
        assert_eq!(b.bound, BigInt::from(9));
        // At r = 1 the relaxed bound 3 still admits the pairing 3.
        assert!(ctx.is_restricted(&w(&[1, -2]), 3, 1).unwrap().verdict);

        let gl = RestrictionContext::standard(GL21).unwrap();
        for p in [3u64, 5, 7] {
            let rep = gl.is_restricted(&w(&[p as i64, 0, 0]), p, 1).unwrap();
            assert!(!rep.verdict);
            assert_eq!(rep.per_root[0].class, RootClass::EvenOnly);
            assert_eq!(rep.per_root[0].bound, BigInt::from(p - 1));
            assert!(gl.is_restricted(&w(&[0, 0, 0]), p, 1).unwrap().verdict);
            assert!(ctx.is_restricted(&w(&[0, 0]), p, 2).unwrap().verdict);
        }
    }

    #[test]
    fn shared_bound_tightens_when_p_divides_kform() {
        let ctx = RestrictionContext::standard(Q2).unwrap();
        // λ([K_α, K_α]) = -2(c_1 + c_2) = -6 is divisible by 3.
        let rep = ctx.is_restricted(&w(&[3, 0]), 3, 1).unwrap();
        assert_eq!(rep.per_root[0].bound, BigInt::from(2));
        assert!(!rep.verdict);
    }

    #[test]
    fn non_admissible_base_is_a_precondition_failure() {
        let d = GL21.datum().unwrap();
        let u = OrderFunctional::descending(3);
        // λ_1 - λ_3 minus the simple root λ_1 - λ_2 is the root λ_2 - λ_3.
        let base = AdmissibleBase { psi_even: vec![w(&[1, -1, 0])], psi_odd: vec![w(&[1, 0, -1])] };
        let lie = GL21.algebra().unwrap();
        let r = RestrictionContext::new(&d, &lie, &u, &base);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn decompose_examples() {
        let opts = SearchOptions::default();
        let q = RestrictionContext::standard(Q2).unwrap();
        assert_eq!(q.steinberg_decompose(&w(&[1, -2]), 3, &opts).unwrap(), vec![w(&[1, -2])]);
        assert_eq!(q.steinberg_decompose(&w(&[3, 3]), 3, &opts).unwrap(), vec![w(&[3, 3])]);
        let g = RestrictionContext::standard(GL11).unwrap();
        assert_eq!(g.steinberg_decompose(&w(&[4, -2]), 3, &opts).unwrap(), vec![w(&[1, 1]), w(&[1, -1])]);
        assert_eq!(g.steinberg_decompose(&w(&[0, 0]), 3, &opts).unwrap(), Vec::<Weight>::new());
        assert_eq!(g.steinberg_decompose(&w(&[9, 0]), 3, &opts).unwrap(), vec![w(&[0, 0]), w(&[0, 0]), w(&[1, 0])]);
        assert!(matches!(q.steinberg_decompose(&w(&[1, 1]), 3, &opts), Err(Error::Precondition(_))));
    }

    #[test]
    fn decompose_reports_failure_with_a_frontier() {
        let g = RestrictionContext::standard(GL21).unwrap();
        // At radius 0 the only digit is the residue (1, 2, 0), which is not
        // flat, and λ itself is not restricted.
        let r = g.steinberg_decompose(&w(&[7, 2, 0]), 3, &SearchOptions { radius: 0, max_digits: 64 });
        match r {
            Err(Error::DecompositionFailed { weight, frontier }) => {
                assert_eq!(weight, w(&[7, 2, 0]));
                assert_eq!(frontier, vec![w(&[7, 2, 0])]);
            }
            other => panic!("expected a failure, got {other:?}"),
        }
        let digits = g.steinberg_decompose(&w(&[7, 2, 0]), 3, &SearchOptions::default()).unwrap();
        let mut sum = Weight::zero(3);
        for (i, d) in digits.iter().enumerate() {
            sum = &sum + &d.scale(&BigInt::from(3u32).pow(i as u32));
        }
        assert_eq!(sum, w(&[7, 2, 0]));
    }

    #[test]
    fn character_arithmetic() {
        let a = CharacterElement::monomial(w(&[1, 0]), BigInt::one());
        let b = CharacterElement::monomial(w(&[0, 1]), BigInt::from(2));
        let s = a.add(&b).unwrap();
        assert_eq!(s.len(), 2);
        let t = s.frobenius_twist(3, 1);
        assert_eq!(t.coefficient(&w(&[3, 0])), BigInt::one());
        assert_eq!(t.coefficient(&w(&[0, 3])), BigInt::from(2));
        assert_eq!(s.frobenius_twist(3, 0), s);
        assert_eq!(a.mul(&CharacterElement::one(2)).unwrap(), a);
        let neg = CharacterElement::monomial(w(&[1, 0]), BigInt::from(-1));
        assert!(a.add(&neg).unwrap().is_empty());
        assert!(a.mul(&CharacterElement::one(3)).is_err());
    }

    #[test]
    fn steinberg_character_highest_term() {
        let f0 = CharacterElement::monomial(w(&[1, -2]), BigInt::one());
        let f1 = CharacterElement::monomial(w(&[2, 1]), BigInt::one());
        let ch = steinberg_character(&[f0.clone(), f1], 3).unwrap();
        assert_eq!(ch, CharacterElement::monomial(w(&[7, 1]), BigInt::one()));
        assert_eq!(steinberg_character(&[f0.clone()], 3).unwrap(), f0);
        assert!(steinberg_character(&[], 3).is_err());
    }

    #[test]
    fn max_term_detects_ties() {
        let u = OrderFunctional::descending(2);
        let c = CharacterElement::from_terms(2, [(w(&[1, 0]), BigInt::one()), (w(&[0, -1]), BigInt::one())]).unwrap();
        // Υ(1, 0) = -1 and Υ(0, -1) = 2.
        assert_eq!(c.max_term(&u).unwrap(), Some((w(&[0, -1]), BigInt::one())));
        let tie = CharacterElement::from_terms(2, [(w(&[2, 0]), BigInt::one()), (w(&[0, -1]), BigInt::one())]).unwrap();
        assert_eq!(tie.max_term(&OrderFunctional::from_integers(&[1, -2])).unwrap(), None);
    }

    proptest! {
        #[test]
        fn restriction_is_monotone_in_r(c in proptest::collection::vec(-20i64..20, 2), pi in 0usize..2, r in 1u32..3) {
            let p = [3u64, 5][pi];
            let ctx = RestrictionContext::standard(Q2).unwrap();
            if ctx.is_restricted(&w(&c), p, r).unwrap().verdict {
                prop_assert!(ctx.is_restricted(&w(&c), p, r + 1).unwrap().verdict);
            }
        }

        #[test]
        fn decomposition_resums(c in proptest::collection::vec(-40i64..40, 3), pi in 0usize..2) {
            let p = [3u64, 5][pi];
            let lambda = w(&c);
            prop_assume!(is_flat(GL21, p, &lambda).unwrap());
            let ctx = RestrictionContext::standard(GL21).unwrap();
            let digits = ctx.steinberg_decompose(&lambda, p, &SearchOptions::default()).unwrap();
            let mut sum = Weight::zero(3);
            for (i, d) in digits.iter().enumerate() {
                prop_assert!(ctx.is_restricted(d, p, 1).unwrap().verdict);
                sum = &sum + &d.scale(&BigInt::from(p).pow(i as u32));
            }
            prop_assert_eq!(sum, lambda);
            prop_assert!(digits.last().map_or(true, |d| !d.is_zero()));
        }

        #[test]
        fn twist_is_a_ring_map(
            a in proptest::collection::vec((proptest::collection::vec(-5i64..5, 2), -3i64..3), 0..4),
            b in proptest::collection::vec((proptest::collection::vec(-5i64..5, 2), -3i64..3), 0..4),
            r in 0u32..3,
        ) {
            let mk = |t: &[(Vec<i64>, i64)]| CharacterElement::from_terms(2, t.iter().map(|(c, m)| (w(c), BigInt::from(*m)))).unwrap();
            let (a, b) = (mk(&a), mk(&b));
            let lhs = a.mul(&b).unwrap().frobenius_twist(5, r);
            prop_assert_eq!(lhs, a.frobenius_twist(5, r).mul(&b.frobenius_twist(5, r)).unwrap());
            prop_assert!(a.terms().all(|(_, m)| !m.is_zero()));
        }
    }
}
