use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::lambda::LambdaTable;
use super::params::GeronimusParams;
use crate::error::{Error, Result};
use crate::laguerre::{gauss_laguerre, laguerre_recurrence_coeffs};

/// Largest `deg p + deg q` accepted by [`inner_product_nu`].
pub const MAX_INNER_DEGREE: usize = 60;

/// A real polynomial that can be evaluated pointwise.
pub trait PolyEval {
    fn degree(&self) -> usize;
    fn eval(&self, x: f64) -> f64;
}

/// Polynomial in the monomial basis, coefficients in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = alloc::vec![0.0; k + 1];
        c[k] = 1.0;
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficients of `L^_n` from the recurrence.
    pub fn monic_laguerre(n: usize, alpha: f64) -> Self {
        let mut prev = alloc::vec![0.0];
        let mut cur = alloc::vec![1.0];
        for k in 0..n {
            let (b, g) = laguerre_recurrence_coeffs(k, alpha);
            let mut next = alloc::vec![0.0; cur.len() + 1];
            for (i, &v) in cur.iter().enumerate() {
                next[i + 1] += v;
                next[i] -= b * v;
            }
            for (i, &v) in prev.iter().enumerate() {
                next[i] -= g * v;
            }
            prev = cur;
            cur = next;
        }
        Self::new(cur)
    }

    /// Coefficients of `Q^_n` for `n <= table.nmax()`.
    pub fn geronimus(n: usize, table: &LambdaTable) -> Self {
        let alpha = table.params().alpha();
        let mut c = Self::monic_laguerre(n, alpha).coeffs;
        if n > 0 {
            let lam = table.lambda(n);
            for (i, v) in Self::monic_laguerre(n - 1, alpha).coeffs.iter().enumerate() {
                c[i] += lam * v;
            }
        }
        Self::new(c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut c = alloc::vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }
}

impl PolyEval for Polynomial {
    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &a| acc * x + a)
    }
}

/// `Q^_n` evaluated through the Laguerre recurrence rather than coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QPolynomial {
    pub n: usize,
    pub alpha: f64,
    pub lambda: f64,
}

impl QPolynomial {
    pub fn from_table(n: usize, table: &LambdaTable) -> Self {
        Self {
            n,
            alpha: table.params().alpha(),
            lambda: table.lambda(n),
        }
    }
}

impl PolyEval for QPolynomial {
    fn degree(&self) -> usize {
        self.n
    }

    fn eval(&self, x: f64) -> f64 {
        let mut prev = 0.0;
        let mut cur = 1.0;
        for k in 0..self.n {
            let (b, g) = laguerre_recurrence_coeffs(k, self.alpha);
            let next = (x - b) * cur - g * prev;
            prev = cur;
            cur = next;
        }
        cur + self.lambda * prev
    }
}

// Gauss-Laguerre rule applied to `p q / (x - c)`. The pole at `c` limits the
// convergence to roughly `exp(-4 sqrt(m |c|))`. Splitting `p q` around `c`
// instead would cancel badly: `Q^_n(c)^2` exceeds `||Q^_n||^2` by `e^{4 sqrt(n|c|)}`.
struct NuRule {
    nodes: Vec<f64>,
    sqrt_weights: Vec<f64>,
    c: f64,
    mass: f64,
}

const MAX_NODES: usize = 2000;

fn node_count(degree: usize, c: f64) -> usize {
    let exact = (degree + 2).div_ceil(2) + 5;
    let root = 8.5 / (-c).sqrt() + (degree as f64 / 2.0).sqrt() + 1.0;
    exact.max((root * root).ceil() as usize).min(MAX_NODES)
}

impl NuRule {
    fn new(degree: usize, params: GeronimusParams) -> Result<Self> {
        if degree > MAX_INNER_DEGREE {
            return Err(Error::DegreeOverflow {
                op: "inner_product_nu",
                degree,
                limit: MAX_INNER_DEGREE,
            });
        }
        let rule = gauss_laguerre(node_count(degree, params.c()), params.alpha())?;
        let sqrt_weights = rule.log_weights.iter().map(|w| (0.5 * w).exp()).collect();
        Ok(Self {
            nodes: rule.nodes,
            sqrt_weights,
            c: params.c(),
            mass: params.mass(),
        })
    }

    fn apply(&self, p: &impl PolyEval, q: &impl PolyEval) -> f64 {
        let mut s = 0.0;
        for (&x, &sw) in self.nodes.iter().zip(&self.sqrt_weights) {
            if sw == 0.0 {
                break;
            }
            s += (sw * p.eval(x)) * (sw * q.eval(x)) / (x - self.c);
        }
        if self.mass > 0.0 {
            s += self.mass * p.eval(self.c) * q.eval(self.c);
        }
        s
    }
}

/// `<p, q> = int p q x^a e^{-x} / (x - c) dx + N p(c) q(c)`.
pub fn inner_product_nu(p: &impl PolyEval, q: &impl PolyEval, params: GeronimusParams) -> Result<f64> {
    let rule = NuRule::new(p.degree() + q.degree(), params)?;
    Ok(rule.apply(p, q))
}

/// Gram matrix of `Q^_0 .. Q^_nmax`.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub entries: Vec<Vec<f64>>,
    /// `max_{i != j} |G_ij| / sqrt(G_ii G_jj)`
    pub max_offdiag: f64,
}

/// Largest `nmax` for which the Gram check is meaningful in double precision.
const MAX_GRAM: usize = 12;

pub fn gram_matrix(nmax: usize, params: GeronimusParams) -> Result<GramMatrix> {
    if nmax > MAX_GRAM {
        return Err(Error::DegreeOverflow {
            op: "gram_matrix",
            degree: nmax,
            limit: MAX_GRAM,
        });
    }
    let table = LambdaTable::new(params, nmax)?;
    let rule = NuRule::new(2 * nmax, params)?;
    let qs: Vec<QPolynomial> = (0..=nmax).map(|n| QPolynomial::from_table(n, &table)).collect();
    let mut entries = alloc::vec![alloc::vec![0.0; nmax + 1]; nmax + 1];
    for i in 0..=nmax {
        for j in 0..=i {
            let v = rule.apply(&qs[i], &qs[j]);
            entries[i][j] = v;
            entries[j][i] = v;
        }
    }
    let mut max_offdiag = 0.0f64;
    for i in 0..=nmax {
        if !(entries[i][i] > 0.0) {
            return Err(Error::Positivity {
                op: "gram_matrix",
                n: i,
                value: entries[i][i],
            });
        }
        for j in 0..i {
            let v = entries[i][j].abs() / (entries[i][i] * entries[j][j]).sqrt();
            max_offdiag = max_offdiag.max(v);
        }
    }
    Ok(GramMatrix { entries, max_offdiag })
}
