//! Enumeration of integer points under a positive-definite quadratic form.
//!
//! Points are found with a Fincke-Pohst search in floating point (with slack)
//! and then re-checked exactly, so rounding can only add candidates, never
//! lose them.

use crate::error::{Error, Result};

/// `value(z) = (½ zᵀGz - bᵀz) / denom`, optionally with per-coordinate lower bounds.
#[derive(Clone, Debug)]
pub struct QuadraticForm {
    gram: Vec<Vec<i64>>,
    linear: Vec<i64>,
    denom: i64,
    lower: Vec<Option<i64>>,
    congruences: Vec<Option<Congruence>>,
}

/// `z[i] ≡ Σ_j coeffs[j] z[j] (mod modulus)`, with `coeffs` supported on `j > i`.
#[derive(Clone, Debug)]
struct Congruence {
    modulus: i64,
    coeffs: Vec<i64>,
}

/// An enumerated point with the exact numerator `zᵀGz - 2bᵀz` of its value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub z: Vec<i64>,
    pub twice_scaled_value: i128,
}

impl QuadraticForm {
    pub fn new(gram: Vec<Vec<i64>>, linear: Vec<i64>, denom: i64, lower: Vec<Option<i64>>) -> Result<Self> {
        let d = gram.len();
        if linear.len() != d || lower.len() != d || gram.iter().any(|row| row.len() != d) {
            return Err(Error::InvalidArgument("quadratic form dimensions disagree".into()));
        }
        if denom <= 0 {
            return Err(Error::InvalidArgument("denominator must be positive".into()));
        }
        if (0..d).any(|i| (0..d).any(|j| gram[i][j] != gram[j][i])) {
            return Err(Error::InvalidArgument("Gram matrix is not symmetric".into()));
        }
        let form = Self {
            gram,
            linear,
            denom,
            lower,
            congruences: vec![None; d],
        };
        form.cholesky()?;
        Ok(form)
    }

    /// Restricts coordinate `i` to `z[i] ≡ Σ_j coeffs[j] z[j] (mod modulus)`.
    /// Only coordinates after `i` may appear on the right.
    pub fn with_congruence(mut self, i: usize, modulus: i64, coeffs: Vec<i64>) -> Result<Self> {
        let d = self.dim();
        if i >= d || coeffs.len() != d || modulus <= 0 {
            return Err(Error::InvalidArgument("malformed congruence".into()));
        }
        if coeffs[..=i].iter().any(|&c| c != 0) {
            return Err(Error::InvalidArgument("congruence may only involve later coordinates".into()));
        }
        self.congruences[i] = Some(Congruence { modulus, coeffs });
        Ok(self)
    }

    fn admissible(&self, z: &[i64]) -> bool {
        self.congruences.iter().enumerate().all(|(i, c)| {
            c.as_ref().is_none_or(|c| {
                let rhs: i64 = c.coeffs.iter().zip(z).map(|(a, b)| a * b).sum();
                (z[i] - rhs).rem_euclid(c.modulus) == 0
            })
        })
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// `zᵀGz - 2bᵀz`, so that `value = numerator / (2 denom)`.
    pub fn numerator(&self, z: &[i64]) -> i128 {
        let mut s: i128 = 0;
        for (i, row) in self.gram.iter().enumerate() {
            let gz: i128 = row.iter().zip(z).map(|(&g, &x)| g as i128 * x as i128).sum();
            s += z[i] as i128 * (gz - 2 * self.linear[i] as i128);
        }
        s
    }

    /// Upper-triangular `R` with `G = RᵀR`.
    fn cholesky(&self) -> Result<Vec<Vec<f64>>> {
        let d = self.dim();
        let mut r = vec![vec![0.0f64; d]; d];
        for i in 0..d {
            for j in i..d {
                let mut s = self.gram[i][j] as f64;
                for k in 0..i {
                    s -= r[k][i] * r[k][j];
                }
                if i == j {
                    if s <= 1e-9 {
                        return Err(Error::InvalidArgument("Gram matrix is not positive definite".into()));
                    }
                    r[i][i] = s.sqrt();
                } else {
                    r[i][j] = s / r[i][i];
                }
            }
        }
        Ok(r)
    }

    /// The real minimiser `G⁻¹b` of the unconstrained form.
    fn center(&self, r: &[Vec<f64>]) -> Vec<f64> {
        let d = self.dim();
        // Solve Rᵀy = b, then Rx = y.
        let mut y = vec![0.0; d];
        for i in 0..d {
            let s: f64 = (0..i).map(|k| r[k][i] * y[k]).sum();
            y[i] = (self.linear[i] as f64 - s) / r[i][i];
        }
        let mut x = vec![0.0; d];
        for i in (0..d).rev() {
            let s: f64 = (i + 1..d).map(|k| r[i][k] * x[k]).sum();
            x[i] = (y[i] - s) / r[i][i];
        }
        x
    }

    /// All admissible points with `value(z) <= max_value`, in lexicographic order.
    pub fn points_up_to(&self, max_value: i64) -> Vec<LatticePoint> {
        let d = self.dim();
        let bound = 2 * self.denom as i128 * max_value as i128;
        if d == 0 {
            return if bound >= 0 {
                vec![LatticePoint {
                    z: Vec::new(),
                    twice_scaled_value: 0,
                }]
            } else {
                Vec::new()
            };
        }
        let r = self.cholesky().expect("checked at construction");
        let c = self.center(&r);
        // (z-c)ᵀG(z-c) = zᵀGz - 2bᵀz + cᵀGc.
        let cgc: f64 = c.iter().zip(&self.linear).map(|(ci, &bi)| ci * bi as f64).sum();
        let radius = bound as f64 + cgc;
        let mut out = Vec::new();
        if radius < -1e-6 {
            return out;
        }
        let mut z = vec![0i64; d];
        let mut state = Search {
            form: self,
            r: &r,
            c: &c,
            bound,
            out: &mut out,
        };
        state.descend(d, radius.max(0.0), &mut z);
        out.sort();
        out
    }

    /// [`Self::points_up_to`] plus the shell check: enumerating to `max_value + 1`
    /// and filtering must reproduce the same set.
    pub fn points_up_to_checked(&self, max_value: i64) -> Result<Vec<LatticePoint>> {
        let pts = self.points_up_to(max_value);
        let bound = 2 * self.denom as i128 * max_value as i128;
        let wider: Vec<LatticePoint> = self
            .points_up_to(max_value + 1)
            .into_iter()
            .filter(|p| p.twice_scaled_value <= bound)
            .collect();
        if wider != pts {
            return Err(Error::Consistency(format!(
                "lattice enumeration unstable at bound {max_value}: {} points vs {} from the wider shell",
                pts.len(),
                wider.len()
            )));
        }
        Ok(pts)
    }
}

struct Search<'a> {
    form: &'a QuadraticForm,
    r: &'a [Vec<f64>],
    c: &'a [f64],
    bound: i128,
    out: &'a mut Vec<LatticePoint>,
}

impl Search<'_> {
    /// Fixes coordinates `i-1, i-2, ..., 0` given `z[i..]` and the remaining radius.
    fn descend(&mut self, i: usize, remaining: f64, z: &mut [i64]) {
        if i == 0 {
            debug_assert!(self.form.admissible(z));
            let v = self.form.numerator(z);
            if v <= self.bound {
                self.out.push(LatticePoint {
                    z: z.to_vec(),
                    twice_scaled_value: v,
                });
            }
            return;
        }
        let k = i - 1;
        let d = z.len();
        let s: f64 = (k + 1..d).map(|j| self.r[k][j] * (z[j] as f64 - self.c[j])).sum();
        let half = remaining.max(0.0).sqrt();
        let slack = 1e-7 * (1.0 + half);
        let lo = self.c[k] + (-half - slack - s) / self.r[k][k];
        let hi = self.c[k] + (half + slack - s) / self.r[k][k];
        let mut from = lo.ceil() as i64;
        if let Some(l) = self.form.lower[k] {
            from = from.max(l);
        }
        let to = hi.floor() as i64;
        let step = match &self.form.congruences[k] {
            Some(c) => {
                let rhs: i64 = c.coeffs.iter().zip(z.iter()).map(|(a, b)| a * b).sum();
                from += (rhs - from).rem_euclid(c.modulus);
                c.modulus
            }
            None => 1,
        };
        let mut x = from;
        while x <= to {
            z[k] = x;
            x += step;
            let t = self.r[k][k] * (z[k] as f64 - self.c[k]) + s;
            let rem = remaining - t * t;
            if rem < -slack * (1.0 + remaining) {
                continue;
            }
            self.descend(k, rem, z);
        }
        z[k] = 0;
    }
}
