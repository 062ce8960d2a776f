//! Divided powers in the Kostant form of a rank-one even pair `X_α, X_{-α}, H_α`.
//!
//! Normal-ordered products are checked against a faithful model: the action
//! on `Z[x, y]` with `X_α = y ∂_x`-dual raising the `x`-degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::rootdata::is_prime;
use crate::{Error, Result};

/// `coefficient · X_{-α}^{(a)} · Π binom(H_α - s, i) · X_α^{(c)}`.
///
/// Each `(s, i)` in `h_binoms` is a factor `binom(H_α - s, i)` with `i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividedMonomial {
    pub a: u32,
    pub h_binoms: Vec<(i64, u32)>,
    pub c: u32,
    pub coefficient: BigInt,
}

/// `binom(n, k)` for natural numbers.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `binom(z, i) = z(z-1)⋯(z-i+1)/i!` for any integer `z`.
pub fn binomial_poly(z: &BigInt, i: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..i {
        acc *= z - BigInt::from(j);
    }
    let mut fact = BigInt::one();
    for j in 1..=i {
        fact *= BigInt::from(j);
    }
    acc / fact
}

/// `X_α^{(m)} X_{-α}^{(n)} = Σ_{i=0}^{min(m,n)} X_{-α}^{(n-i)} binom(H_α - m - n + 2i, i) X_α^{(m-i)}`.
pub fn normal_order(m: u32, n: u32) -> Vec<DividedMonomial> {
    (0..=m.min(n))
        .map(|i| DividedMonomial {
            a: n - i,
            h_binoms: if i == 0 { Vec::new() } else { alloc::vec![(i64::from(m + n - 2 * i), i)] },
            c: m - i,
            coefficient: BigInt::one(),
        })
        .collect()
}

/// `X_α^{(n)} X_α^{(m)} = binom(n+m, n) X_α^{(n+m)}`; returns the coefficient and exponent.
pub fn bw_multiply(n: u32, m: u32) -> (BigUint, u32) {
    (binomial(u64::from(n) + u64::from(m), u64::from(n)), n + m)
}

/// `binom(n, k) mod p` as the product of the binomials of base-`p` digits.
pub fn lucas_binom(n: &BigUint, k: &BigUint, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(alloc::format!("{p} is not prime")));
    }
    let pb = BigUint::from(p);
    let (mut n, mut k) = (n.clone(), k.clone());
    let mut acc = 1u64;
    while !k.is_zero() {
        let (nq, nd) = n.div_rem(&pb);
        let (kq, kd) = k.div_rem(&pb);
        let (nd, kd) = (nd.to_u64().expect("digit < p"), kd.to_u64().expect("digit < p"));
        if kd > nd {
            return Ok(0);
        }
        let b = binomial(nd, kd) % &pb;
        acc = (u128::from(acc) * u128::from(b.to_u64().expect("residue < p")) % u128::from(p)) as u64;
        n = nq;
        k = kq;
    }
    Ok(acc % p)
}

/// A vector of `Z[x, y]`, keyed by exponent pairs `(a, b)` for `x^a y^b`.
pub type Poly = BTreeMap<(u32, u32), BigInt>;

fn push(out: &mut Poly, key: (u32, u32), v: BigInt) {
    if v.is_zero() {
        return;
    }
    let e = out.entry(key).or_insert_with(BigInt::zero);
    *e += v;
    if e.is_zero() {
        out.remove(&key);
    }
}

/// The action of the rank-one hyperalgebra on `Z[x, y]`.
///
/// `X_α^{(m)} x^a y^b = binom(b, m) x^{a+m} y^{b-m}`,
/// `X_{-α}^{(n)} x^a y^b = binom(a, n) x^{a-n} y^{b+n}`, and
/// `binom(H_α - s, i)` acts on `x^a y^b` by the scalar `binom(a - b - s, i)`.
pub struct PolyOperator;

impl PolyOperator {
    pub fn raise(m: u32, v: &Poly) -> Poly {
        let mut out = Poly::new();
        for (&(a, b), c) in v {
            if m <= b {
                push(&mut out, (a + m, b - m), c * BigInt::from(binomial(u64::from(b), u64::from(m))));
            }
        }
        out
    }

    pub fn lower(n: u32, v: &Poly) -> Poly {
        let mut out = Poly::new();
        for (&(a, b), c) in v {
            if n <= a {
                push(&mut out, (a - n, b + n), c * BigInt::from(binomial(u64::from(a), u64::from(n))));
            }
        }
        out
    }

    pub fn h_binom(s: i64, i: u32, v: &Poly) -> Poly {
        let mut out = Poly::new();
        for (&(a, b), c) in v {
            let z = BigInt::from(i64::from(a) - i64::from(b) - s);
            push(&mut out, (a, b), c * binomial_poly(&z, i));
        }
        out
    }

    /// The action of a formal sum of normal-ordered monomials.
    pub fn apply(terms: &[DividedMonomial], v: &Poly) -> Poly {
        let mut out = Poly::new();
        for t in terms {
            let mut w = Self::raise(t.c, v);
            for &(s, i) in &t.h_binoms {
                w = Self::h_binom(s, i, &w);
            }
            w = Self::lower(t.a, &w);
            for (k, c) in w {
                push(&mut out, k, c * &t.coefficient);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub m: u32,
    pub n: u32,
    /// The monomial `x^a y^b` on which the two sides differ.
    pub monomial: (u32, u32),
    pub lhs: Poly,
    pub rhs: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorReport {
    pub p: u64,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl CommutatorReport {
    pub fn success(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn reduce(v: Poly, p: u64) -> Poly {
    if p == 0 {
        return v;
    }
    let pb = BigInt::from(p);
    v.into_iter().map(|(k, c)| (k, c.mod_floor(&pb))).filter(|(_, c)| !c.is_zero()).collect()
}

/// Checks `X_α^{(m)} ∘ X_{-α}^{(n)} = normal_order(m, n)` as operators on every
/// `x^a y^b` with `a + b ≤ degree_bound`, for `m ≤ max_m`, `n ≤ max_n`, over
/// `Z` (`p = 0`) or `F_p`.
pub fn verify_commutator_formula(max_m: u32, max_n: u32, degree_bound: u32, p: u64) -> Result<CommutatorReport> {
    verify_expansion(max_m, max_n, degree_bound, p, normal_order)
}

/// As [`verify_commutator_formula`] with an arbitrary proposed expansion.
/// The reported counterexample is the least `(m, n, a, b)` in lexicographic order.
pub fn verify_expansion(
    max_m: u32,
    max_n: u32,
    degree_bound: u32,
    p: u64,
    expansion: impl Fn(u32, u32) -> Vec<DividedMonomial>,
) -> Result<CommutatorReport> {
    if p != 0 && (p == 2 || !is_prime(p)) {
        return Err(Error::InvalidParameter(alloc::format!("characteristic must be 0 or an odd prime, got {p}")));
    }
    let mut checked = 0u64;
    for m in 0..=max_m {
        for n in 0..=max_n {
            let rhs_terms = expansion(m, n);
            for a in 0..=degree_bound {
                for b in 0..=degree_bound - a {
                    let v: Poly = [((a, b), BigInt::one())].into_iter().collect();
                    let lhs = reduce(PolyOperator::raise(m, &PolyOperator::lower(n, &v)), p);
                    let rhs = reduce(PolyOperator::apply(&rhs_terms, &v), p);
                    checked += 1;
                    if lhs != rhs {
                        let counterexample = Some(Counterexample { m, n, monomial: (a, b), lhs, rhs });
                        return Ok(CommutatorReport { p, checked, counterexample });
                    }
                }
            }
        }
    }
    Ok(CommutatorReport { p, checked, counterexample: None })
}
