//! Brute-force Clifford superalgebras.
//!
//! `Cl(V, g)` is built from words in generators `k_0, …, k_{l-1}` subject to
//! `k_s k_t + k_t k_s = 2 g(s, t)`, by explicit rewriting. The simple
//! supermodule is then read off the semisimple quotient `A / rad A`:
//! `rad A` is the radical of the trace form `tr(L_{xy})` (char 0), and the
//! odd part of the centre of `A / rad A` decides between `M(r|s)`
//! (simple module of dimension `√dim`) and `Q(n)` (dimension `√(2·dim)`).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Q = BigRational;
type Element = BTreeMap<Vec<usize>, Q>;

fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

fn add_into(out: &mut Element, word: Vec<usize>, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = out.entry(word.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        out.remove(&word);
    }
}

/// Rewrites an arbitrary word into strictly increasing words.
fn normalize(word: Vec<usize>, coeff: Q, gram: &[Vec<i64>], out: &mut Element) {
    if coeff.is_zero() {
        return;
    }
    let Some(i) = (0..word.len().saturating_sub(1)).find(|&i| word[i] >= word[i + 1]) else {
        add_into(out, word, coeff);
        return;
    };
    let (s, t) = (word[i], word[i + 1]);
    let mut shorter = word[..i].to_vec();
    shorter.extend_from_slice(&word[i + 2..]);
    if s == t {
        // k_s^2 = g(s, s)
        normalize(shorter, &coeff * q(gram[s][s]), gram, out);
    } else {
        // k_s k_t = -k_t k_s + 2 g(s, t)
        let mut swapped = word.clone();
        swapped.swap(i, i + 1);
        normalize(swapped, -coeff.clone(), gram, out);
        normalize(shorter, &coeff * q(2 * gram[s][t]), gram, out);
    }
}

struct Algebra {
    basis: Vec<Vec<usize>>,
    /// `mult[i][j]` = coordinates of `b_i b_j`.
    mult: Vec<Vec<Vec<Q>>>,
}

impl Algebra {
    fn new(gram: &[Vec<i64>]) -> Self {
        let l = gram.len();
        let basis: Vec<Vec<usize>> =
            (0..1usize << l).map(|mask| (0..l).filter(|&s| mask >> s & 1 == 1).collect()).collect();
        let index: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let dim = basis.len();
        let mut mult = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut word = basis[i].clone();
                word.extend_from_slice(&basis[j]);
                let mut out = Element::new();
                normalize(word, Q::one(), gram, &mut out);
                for (w, c) in out {
                    mult[i][j][index[&w]] = c;
                }
            }
        }
        Algebra { basis, mult }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn is_odd(&self, i: usize) -> bool {
        self.basis[i].len() % 2 == 1
    }

    fn product(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += a * b * c;
                    }
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// `tr(L_x)`.
    fn trace_left(&self, x: &[Q]) -> Q {
        (0..self.dim()).map(|j| self.product(x, &self.unit(j))[j].clone()).fold(Q::zero(), |a, b| a + b)
    }
}

/// Basis of the right nullspace `{v : M v = 0}` over `Q`.
fn nullspace(m: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut rows: Vec<Vec<Q>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    M,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleResult {
    pub dim: u64,
    pub kind: Kind,
    pub radical_dim: usize,
}

/// Simple-supermodule dimension and type of `Cl(V, gram)` over an
/// algebraic closure of `Q`.
pub fn clifford_simple_module(gram: &[Vec<i64>]) -> Result<OracleResult, String> {
    let a = Algebra::new(gram);
    let n = a.dim();
    let products: Vec<Vec<Vec<Q>>> =
        (0..n).map(|i| (0..n).map(|j| a.product(&a.unit(i), &a.unit(j))).collect()).collect();
    let trace_form: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| a.trace_left(&products[i][j])).collect()).collect();

    // Radical restricted to each parity; the radical is a graded ideal.
    let parity_indices = |odd: bool| -> Vec<usize> { (0..n).filter(|&i| a.is_odd(i) == odd).collect() };
    let radical_in = |idx: &[usize]| -> Vec<Vec<Q>> {
        let m: Vec<Vec<Q>> = (0..n).map(|i| idx.iter().map(|&j| trace_form[i][j].clone()).collect()).collect();
        nullspace(&m, idx.len())
            .into_iter()
            .map(|v| {
                let mut full = vec![Q::zero(); n];
                for (c, &j) in v.into_iter().zip(idx) {
                    full[j] = c;
                }
                full
            })
            .collect()
    };
    let even_idx = parity_indices(false);
    let odd_idx = parity_indices(true);
    let rad_even = radical_in(&even_idx);
    let rad_odd = radical_in(&odd_idx);
    let radical: Vec<Vec<Q>> = rad_even.iter().chain(&rad_odd).cloned().collect();
    let full_radical = nullspace(&trace_form, n);
    if full_radical.len() != radical.len() {
        return Err(format!("radical is not graded: {} vs {}", full_radical.len(), radical.len()));
    }

    // v ∈ rad A  ⇔  annihilator · v = 0.
    let annihilator = nullspace(&radical, n);
    let in_radical_rows = |v: &[Q]| -> Vec<Q> {
        annihilator.iter().map(|w| w.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y)).collect()
    };

    // Centre of A / rad A, parity by parity: x with [x, b_j] ∈ rad A for all j.
    let centre_dim = |idx: &[usize]| -> usize {
        let mut m: Vec<Vec<Q>> = Vec::new();
        for j in 0..n {
            let cols: Vec<Vec<Q>> = idx
                .iter()
                .map(|&i| {
                    let comm: Vec<Q> =
                        products[i][j].iter().zip(&products[j][i]).map(|(x, y)| x - y).collect();
                    in_radical_rows(&comm)
                })
                .collect();
            for row in 0..annihilator.len() {
                m.push(cols.iter().map(|c| c[row].clone()).collect());
            }
        }
        nullspace(&m, idx.len()).len()
    };
    let z_even = centre_dim(&even_idx) - rad_even.len();
    let z_odd = centre_dim(&odd_idx) - rad_odd.len();
    let quotient = (n - radical.len()) as u64;
    let kind = match (z_even, z_odd) {
        (1, 0) => Kind::M,
        (1, 1) => Kind::Q,
        other => return Err(format!("quotient is not a simple superalgebra: centre dims {other:?}")),
    };
    let square = if kind == Kind::M { quotient } else { 2 * quotient };
    let dim = (square as f64).sqrt().round() as u64;
    if dim * dim != square {
        return Err(format!("dimension {square} is not a square"));
    }
    Ok(OracleResult { dim, kind, radical_dim: radical.len() })
}
