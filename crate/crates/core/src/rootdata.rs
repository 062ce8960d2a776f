//! Super root data of split quasireductive supergroups.
//!
//! A datum records the even roots with their coroots, the nonzero odd weights
//! of the adjoint representation with their multiplicities `dim g_odd^γ`, and
//! the dimension of the odd Cartan `h_odd` (the odd weight-zero part).
//!
//! On top of that this module provides the torus-level unimodularity
//! criteria for `G` and its Frobenius kernels `G_r`, the distinguished
//! character `δ_r`, and the dimension counts of `O(G_r)` and `hy(G_r)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::lattice::{check_rank, pair, Coweight, Weight};
use crate::liesuper::LieFamily;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenRoot {
    pub root: Weight,
    pub coroot: Coweight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddRoot {
    pub root: Weight,
    /// `dim g_odd^γ`, always positive.
    pub mult: u64,
}

/// Root datum of a split quasireductive supergroup. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperRootDatum {
    rank: usize,
    label: String,
    even_roots: Vec<EvenRoot>,
    odd_roots: Vec<OddRoot>,
    h_odd_dim: u64,
    lie_handle: Option<LieFamily>,
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::InvalidDatum { path: path.into(), message: message.into() }
}

impl SuperRootDatum {
    /// Validates and builds a datum.
    ///
    /// Errors carry the path of the offending entry, e.g. `even_roots[3].coroot`.
    pub fn new(
        rank: usize,
        label: impl Into<String>,
        even_roots: Vec<EvenRoot>,
        odd_roots: Vec<OddRoot>,
        h_odd_dim: u64,
    ) -> Result<Self> {
        for (i, e) in even_roots.iter().enumerate() {
            if e.root.rank() != rank {
                return Err(invalid(format!("even_roots[{i}].root"), format!("expected {rank} coordinates")));
            }
            if e.coroot.rank() != rank {
                return Err(invalid(format!("even_roots[{i}].coroot"), format!("expected {rank} coordinates")));
            }
            if e.root.is_zero() {
                return Err(invalid(format!("even_roots[{i}].root"), "roots must be nonzero"));
            }
            if pair(&e.root, &e.coroot)? != BigInt::from(2) {
                return Err(invalid(format!("even_roots[{i}]"), "pairing of root and coroot must be 2"));
            }
            if even_roots[..i].iter().any(|f| f.root == e.root) {
                return Err(invalid(format!("even_roots[{i}].root"), "duplicate even root"));
            }
        }
        for (i, e) in even_roots.iter().enumerate() {
            let neg = -&e.root;
            if !even_roots.iter().any(|f| f.root == neg) {
                return Err(invalid(format!("even_roots[{i}].root"), "negative of this root is missing"));
            }
        }
        for (i, o) in odd_roots.iter().enumerate() {
            if o.root.rank() != rank {
                return Err(invalid(format!("odd_roots[{i}].root"), format!("expected {rank} coordinates")));
            }
            if o.root.is_zero() {
                return Err(invalid(
                    format!("odd_roots[{i}].root"),
                    "odd roots must be nonzero; weight zero is recorded by h_odd_dim",
                ));
            }
            if o.mult == 0 {
                return Err(invalid(format!("odd_roots[{i}].mult"), "multiplicity must be positive"));
            }
            if odd_roots[..i].iter().any(|f| f.root == o.root) {
                return Err(invalid(format!("odd_roots[{i}].root"), "duplicate odd root"));
            }
        }
        Ok(SuperRootDatum { rank, label: label.into(), even_roots, odd_roots, h_odd_dim, lie_handle: None })
    }

    /// Attaches the built-in Lie superalgebra when this datum is the datum of
    /// `family` up to the order in which roots are listed. The roots are then
    /// listed in the built-in order.
    pub fn with_lie_handle(mut self, family: LieFamily) -> Result<Self> {
        let built = family.datum()?;
        let mut even = self.even_roots.clone();
        let mut built_even = built.even_roots.clone();
        even.sort_by(|a, b| a.root.cmp(&b.root));
        built_even.sort_by(|a, b| a.root.cmp(&b.root));
        let mut odd = self.odd_roots.clone();
        let mut built_odd = built.odd_roots.clone();
        odd.sort_by(|a, b| a.root.cmp(&b.root));
        built_odd.sort_by(|a, b| a.root.cmp(&b.root));
        if built.rank != self.rank || built_even != even || built_odd != odd || built.h_odd_dim != self.h_odd_dim {
            return Err(invalid("label", format!("datum does not match the built-in {family}")));
        }
        self.even_roots = built.even_roots;
        self.odd_roots = built.odd_roots;
        self.lie_handle = Some(family);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn even_roots(&self) -> &[EvenRoot] {
        &self.even_roots
    }

    pub fn odd_roots(&self) -> &[OddRoot] {
        &self.odd_roots
    }

    pub fn h_odd_dim(&self) -> u64 {
        self.h_odd_dim
    }

    pub fn lie_handle(&self) -> Option<LieFamily> {
        self.lie_handle
    }

    /// `n_even = dim g_even = #Δ_even + l`.
    pub fn n_even(&self) -> u64 {
        (self.even_roots.len() + self.rank) as u64
    }

    /// `n_odd = dim g_odd`.
    pub fn n_odd(&self) -> u64 {
        self.odd_roots.iter().map(|o| o.mult).sum::<u64>() + self.h_odd_dim
    }

    /// `dim g_odd^γ`; the weight zero gives `dim h_odd`.
    pub fn odd_multiplicity(&self, gamma: &Weight) -> u64 {
        if gamma.is_zero() {
            return self.h_odd_dim;
        }
        self.odd_roots.iter().find(|o| o.root == *gamma).map_or(0, |o| o.mult)
    }

    /// Membership in `Δ`, which contains `0` exactly when `h_odd ≠ 0`.
    pub fn contains_root(&self, w: &Weight) -> bool {
        if w.is_zero() {
            return self.h_odd_dim > 0;
        }
        self.even_roots.iter().any(|e| e.root == *w) || self.odd_roots.iter().any(|o| o.root == *w)
    }

    pub fn coroot(&self, alpha: &Weight) -> Option<&Coweight> {
        self.even_roots.iter().find(|e| e.root == *alpha).map(|e| &e.coroot)
    }
}

fn type_a_even_roots(rank: usize, blocks: &[core::ops::Range<usize>]) -> Vec<EvenRoot> {
    let mut out = Vec::new();
    for block in blocks {
        for i in block.clone() {
            for j in block.clone() {
                if i != j {
                    let root = &Weight::unit(rank, i) - &Weight::unit(rank, j);
                    out.push(EvenRoot { coroot: root.to_coweight(), root });
                }
            }
        }
    }
    out
}

/// The datum of `GL(m|n)`.
pub fn build_gl(m: usize, n: usize) -> Result<SuperRootDatum> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(String::from("GL(m|n) needs m, n >= 1")));
    }
    let rank = m + n;
    let even = type_a_even_roots(rank, &[0..m, m..rank]);
    let mut odd = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            if (i < m) != (j < m) {
                odd.push(OddRoot { root: &Weight::unit(rank, i) - &Weight::unit(rank, j), mult: 1 });
            }
        }
    }
    let mut d = SuperRootDatum::new(rank, format!("gl({m}|{n})"), even, odd, 0)?;
    d.lie_handle = Some(LieFamily::Gl { m, n });
    Ok(d)
}

/// The datum of the queer supergroup `Q(n)`.
pub fn build_q(n: usize) -> Result<SuperRootDatum> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("Q(n) needs n >= 1")));
    }
    let even = type_a_even_roots(n, &[0..n]);
    let odd = even.iter().map(|e| OddRoot { root: e.root.clone(), mult: 1 }).collect();
    let mut d = SuperRootDatum::new(n, format!("q({n})"), even, odd, n as u64)?;
    d.lie_handle = Some(LieFamily::Queer { n });
    Ok(d)
}

/// The datum of the periplectic supergroup `P(n)`.
pub fn build_p(n: usize) -> Result<SuperRootDatum> {
    if n < 2 {
        return Err(Error::InvalidParameter(String::from("P(n) needs n >= 2")));
    }
    let even = type_a_even_roots(n, &[0..n]);
    let mut odd = Vec::new();
    for i in 0..n {
        for j in i..n {
            let w = &Weight::unit(n, i) + &Weight::unit(n, j);
            odd.push(OddRoot { root: w, mult: 1 });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let w = &Weight::unit(n, i) + &Weight::unit(n, j);
            odd.push(OddRoot { root: -w, mult: 1 });
        }
    }
    let mut d = SuperRootDatum::new(n, format!("p({n})"), even, odd, 0)?;
    d.lie_handle = Some(LieFamily::Periplectic { n });
    Ok(d)
}

/// The datum of `F ⋉ (G_a^odd)^n` where `F` has the purely even datum
/// `even_datum` and `T` acts on the i-th odd line through the character `chars[i]`.
///
/// The odd roots are the distinct nonzero `-χ_i`, counted with multiplicity;
/// each `χ_i = 0` contributes one dimension to `h_odd`.
pub fn build_semidirect(even_datum: &SuperRootDatum, chars: &[Weight]) -> Result<SuperRootDatum> {
    if !even_datum.odd_roots.is_empty() || even_datum.h_odd_dim != 0 {
        return Err(Error::InvalidParameter(String::from("the base datum must have no odd part")));
    }
    let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
    let mut zeros = 0;
    for (i, chi) in chars.iter().enumerate() {
        if chi.rank() != even_datum.rank {
            return Err(invalid(format!("chars[{i}]"), format!("expected {} coordinates", even_datum.rank)));
        }
        if chi.is_zero() {
            zeros += 1;
        } else {
            *counts.entry(-chi).or_insert(0) += 1;
        }
    }
    let odd = counts.into_iter().map(|(root, mult)| OddRoot { root, mult }).collect();
    SuperRootDatum::new(
        even_datum.rank,
        format!("{}⋉Ga^{}", even_datum.label, chars.len()),
        even_datum.even_roots.clone(),
        odd,
        zeros,
    )
}

/// The purely even datum of `GL_n`.
pub fn build_gl_even(n: usize) -> Result<SuperRootDatum> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("GL_n needs n >= 1")));
    }
    SuperRootDatum::new(n, format!("GL_{n}"), type_a_even_roots(n, &[0..n]), Vec::new(), 0)
}

/// A linear functional `Υ` on `X(T) ⊗ Q`, used only through its sign on roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderFunctional(Vec<BigRational>);

impl OrderFunctional {
    pub fn new(values: Vec<BigRational>) -> Self {
        OrderFunctional(values)
    }

    pub fn from_integers(values: &[i64]) -> Self {
        OrderFunctional(values.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
    }

    /// `Υ(λ_i) = -i` (1-based).
    pub fn descending(rank: usize) -> Self {
        Self::from_integers(&(1..=rank as i64).map(|i| -i).collect::<Vec<_>>())
    }

    pub fn values(&self) -> &[BigRational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn eval(&self, w: &Weight) -> BigRational {
        self.0
            .iter()
            .zip(w.coords())
            .map(|(u, c)| u * BigRational::from_integer(c.clone()))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Checks that `Υ` is nonzero on every nonzero root of `d`.
    pub fn validate(&self, d: &SuperRootDatum) -> Result<()> {
        check_rank(d.rank, self.rank())?;
        let roots = d.even_roots.iter().map(|e| &e.root).chain(d.odd_roots.iter().map(|o| &o.root));
        for r in roots {
            if self.eval(r).is_zero() {
                return Err(Error::InvalidOrder { root: r.clone() });
            }
        }
        Ok(())
    }
}

/// The split `Δ \ {0} = Δ^+ ⊔ Δ^-` by the sign of `Υ`. Each part is sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    pub even_pos: Vec<Weight>,
    pub even_neg: Vec<Weight>,
    pub odd_pos: Vec<OddRoot>,
    pub odd_neg: Vec<OddRoot>,
}

impl PositiveSystem {
    pub fn odd_pos_dim(&self) -> u64 {
        self.odd_pos.iter().map(|o| o.mult).sum()
    }

    pub fn odd_neg_dim(&self) -> u64 {
        self.odd_neg.iter().map(|o| o.mult).sum()
    }
}

pub fn positive_system(d: &SuperRootDatum, u: &OrderFunctional) -> Result<PositiveSystem> {
    u.validate(d)?;
    let (mut even_pos, mut even_neg): (Vec<_>, Vec<_>) =
        d.even_roots.iter().map(|e| e.root.clone()).partition(|r| u.eval(r).is_positive());
    let (mut odd_pos, mut odd_neg): (Vec<_>, Vec<_>) =
        d.odd_roots.iter().cloned().partition(|o| u.eval(&o.root).is_positive());
    even_pos.sort();
    even_neg.sort();
    odd_pos.sort_by(|a, b| a.root.cmp(&b.root));
    odd_neg.sort_by(|a, b| a.root.cmp(&b.root));
    Ok(PositiveSystem { even_pos, even_neg, odd_pos, odd_neg })
}

/// Simple roots of `Δ_even^+`: positive roots that are not a sum of two positive roots.
pub fn simple_roots(ps: &PositiveSystem) -> Vec<Weight> {
    let pos = &ps.even_pos;
    let mut out: Vec<Weight> = pos
        .iter()
        .filter(|a| !pos.iter().any(|b| *b != **a && pos.contains(&(*a - b))))
        .cloned()
        .collect();
    out.sort();
    out
}

/// The even base `Ψ_even` of `d` under `u`.
pub fn even_base(d: &SuperRootDatum, u: &OrderFunctional) -> Result<Vec<Weight>> {
    Ok(simple_roots(&positive_system(d, u)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateDivisibility {
    pub index: usize,
    pub value: BigInt,
    pub divides: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularityReport {
    /// `Σ_γ dim(g_odd^γ) γ`.
    pub odd_root_sum: Weight,
    /// `p^r`, or `None` in characteristic zero.
    pub modulus: Option<BigInt>,
    /// For each coordinate, whether it lies in `p^r Z` (in characteristic
    /// zero: whether it vanishes).
    pub per_coordinate: Vec<CoordinateDivisibility>,
    pub verdict: bool,
}

pub fn odd_root_sum(d: &SuperRootDatum) -> Weight {
    d.odd_roots
        .iter()
        .fold(Weight::zero(d.rank), |acc, o| &acc + &o.root.scale(&BigInt::from(o.mult)))
}

/// The exponent weight of the restriction of `χ_r` to the torus. The even
/// roots contribute nothing because they sum to zero, so this does not
/// depend on `r`.
pub fn chi_r_on_torus(d: &SuperRootDatum) -> Weight {
    odd_root_sum(d)
}

pub fn is_unimodular_char0(d: &SuperRootDatum) -> UnimodularityReport {
    let sum = odd_root_sum(d);
    let per_coordinate: Vec<_> = sum
        .coords()
        .iter()
        .enumerate()
        .map(|(index, v)| CoordinateDivisibility { index, value: v.clone(), divides: v.is_zero() })
        .collect();
    let verdict = per_coordinate.iter().all(|c| c.divides);
    UnimodularityReport { odd_root_sum: sum, modulus: None, per_coordinate, verdict }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p > 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{p} is not an odd prime")))
    }
}

pub(crate) fn check_level(r: u32) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidParameter(String::from("the Frobenius level r must be positive")))
    } else {
        Ok(())
    }
}

/// Unimodularity of the r-th Frobenius kernel: every coordinate of the odd
/// root sum must lie in `p^r Z`.
pub fn is_frobenius_unimodular(d: &SuperRootDatum, p: u64, r: u32) -> Result<UnimodularityReport> {
    check_odd_prime(p)?;
    check_level(r)?;
    let modulus = BigInt::from(p).pow(r);
    let sum = odd_root_sum(d);
    let per_coordinate: Vec<_> = sum
        .coords()
        .iter()
        .enumerate()
        .map(|(index, v)| CoordinateDivisibility {
            index,
            value: v.clone(),
            divides: (v % &modulus).is_zero(),
        })
        .collect();
    let verdict = per_coordinate.iter().all(|c| c.divides);
    Ok(UnimodularityReport { odd_root_sum: sum, modulus: Some(modulus), per_coordinate, verdict })
}

/// Whether every Frobenius kernel `G_r` is unimodular, i.e. the odd root sum vanishes.
pub fn all_frobenius_unimodular(d: &SuperRootDatum) -> bool {
    odd_root_sum(d).is_zero()
}

/// `δ_r|_T = -(p^r - 1) Σ_{α ∈ Δ_even^+} α + Σ_{γ ∈ Δ_odd^-} dim(g_odd^γ) γ`.
pub fn delta_r(d: &SuperRootDatum, u: &OrderFunctional, p: u64, r: u32) -> Result<Weight> {
    check_odd_prime(p)?;
    check_level(r)?;
    let ps = positive_system(d, u)?;
    let factor = BigInt::from(p).pow(r) - BigInt::one();
    let even_sum = ps.even_pos.iter().fold(Weight::zero(d.rank), |acc, a| &acc + a);
    let odd_sum =
        ps.odd_neg.iter().fold(Weight::zero(d.rank), |acc, o| &acc + &o.root.scale(&BigInt::from(o.mult)));
    Ok(&odd_sum - &even_sum.scale(&factor))
}

/// `dim O(G_r) = p^{r n_even} 2^{n_odd}`.
pub fn dim_o_gr(d: &SuperRootDatum, p: u64, r: u32) -> Result<BigUint> {
    check_odd_prime(p)?;
    check_level(r)?;
    let exp = u64::from(r) * d.n_even();
    Ok(BigUint::from(p).pow(exp) * BigUint::from(2u32).pow(d.n_odd()))
}

/// Number of PBW monomials spanning `hy(G_r)`: each `X_α^{(n)}` and
/// `H_i^{(m)}` takes `p^r` exponents, each `Y_{(γ,j)}` and `K_t` two.
pub fn pbw_monomial_count(d: &SuperRootDatum, p: u64, r: u32) -> Result<BigUint> {
    check_odd_prime(p)?;
    check_level(r)?;
    let divided = BigUint::from(p).pow(r);
    let two = BigUint::from(2u32);
    let mut count = BigUint::one();
    for _ in &d.even_roots {
        count *= &divided;
    }
    for _ in 0..d.rank {
        count *= &divided;
    }
    for o in &d.odd_roots {
        for _ in 0..o.mult {
            count *= &two;
        }
    }
    for _ in 0..d.h_odd_dim {
        count *= &two;
    }
    Ok(count)
}

/// Dimensions of `ind_{B_r^+}^{G_r} N` and `coind_{B_r^+}^{G_r} N` for `dim N = dim_n`.
pub fn induced_dims(
    d: &SuperRootDatum,
    u: &OrderFunctional,
    p: u64,
    r: u32,
    dim_n: u64,
) -> Result<(BigUint, BigUint)> {
    check_odd_prime(p)?;
    check_level(r)?;
    let ps = positive_system(d, u)?;
    let pr = BigUint::from(p).pow(r);
    let two = BigUint::from(2u32);
    let n = BigUint::from(dim_n);
    let ind = pr.clone().pow(ps.even_pos.len() as u64) * two.clone().pow(ps.odd_pos_dim()) * &n;
    let coind = pr.pow(ps.even_neg.len() as u64) * two.pow(ps.odd_neg_dim()) * &n;
    Ok((ind, coind))
}

impl core::fmt::Display for SuperRootDatum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "{} (rank {}, {} even roots, {} odd roots, dim h_odd = {})",
            self.label,
            self.rank,
            self.even_roots.len(),
            self.odd_roots.len(),
            self.h_odd_dim
        )
    }
}

impl OddRoot {
    pub fn describe(&self) -> String {
        format!("{} x{}", self.root, self.mult)
    }
}
