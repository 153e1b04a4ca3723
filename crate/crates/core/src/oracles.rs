//! Independent reference computations: finite characters from Gelfand-Tsetlin
//! patterns, tensor product multiplicities, the charge statistic on tableaux
//! and affine characters from the Weyl-Kac formula.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::characters::{finish, Formula, WeightGradedCharacter};
use crate::error::{Error, Result};
use crate::kostka::RectangleMultiset;
use crate::qseries::{inverse_pochhammer_series, LaurentPolynomial, PochhammerOrder, TruncatedSeries};
use crate::weights::{
    affine_translate, cartan_matrix, mat_vec, partitions_of, to_dominant, weight_to_partition, weyl_dimension,
    AffineWeightLabel, PartitionShape, RankedWeight,
};

pub type WeightMultiplicities = BTreeMap<RankedWeight, BigInt>;

/// `gl_j` weights `(μ_1..μ_j)` of all patterns below a row, with multiplicity.
fn gt_weights(row: &[i64], memo: &mut HashMap<Vec<i64>, Arc<HashMap<Vec<i64>, BigInt>>>) -> Arc<HashMap<Vec<i64>, BigInt>> {
    if let Some(hit) = memo.get(row) {
        return hit.clone();
    }
    let j = row.len();
    let total: i64 = row.iter().sum();
    let mut out: HashMap<Vec<i64>, BigInt> = HashMap::new();
    if j == 1 {
        out.insert(vec![total], BigInt::from(1));
    } else {
        // Rows y of length j-1 with row[i] >= y[i] >= row[i+1].
        let mut y = vec![0i64; j - 1];
        fn rec(
            i: usize,
            row: &[i64],
            y: &mut Vec<i64>,
            total: i64,
            memo: &mut HashMap<Vec<i64>, Arc<HashMap<Vec<i64>, BigInt>>>,
            out: &mut HashMap<Vec<i64>, BigInt>,
        ) {
            if i == y.len() {
                let below = gt_weights(y, memo);
                let ysum: i64 = y.iter().sum();
                for (mu, c) in below.iter() {
                    let mut m = mu.clone();
                    m.push(total - ysum);
                    *out.entry(m).or_default() += c;
                }
                return;
            }
            for v in row[i + 1]..=row[i] {
                y[i] = v;
                rec(i + 1, row, y, total, memo, out);
            }
        }
        rec(0, row, &mut y, total, memo, &mut out);
    }
    let out = Arc::new(out);
    memo.insert(row.to_vec(), out.clone());
    out
}

fn finite_char_cache() -> &'static Mutex<HashMap<RankedWeight, Arc<WeightMultiplicities>>> {
    static CACHE: OnceLock<Mutex<HashMap<RankedWeight, Arc<WeightMultiplicities>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Weight multiplicities of the irreducible `sl(r+1)` module `V(λ)`.
pub fn finite_char(lambda: &RankedWeight) -> Result<Arc<WeightMultiplicities>> {
    lambda.require_dominant()?;
    if let Some(hit) = finite_char_cache().lock().expect("cache poisoned").get(lambda) {
        return Ok(hit.clone());
    }
    let r = lambda.rank();
    let p = weight_to_partition(lambda)?;
    let top: Vec<i64> = (0..=r).map(|i| p.part(i) as i64).collect();
    let mut memo = HashMap::new();
    let gl = gt_weights(&top, &mut memo);
    let mut out = WeightMultiplicities::new();
    for (mu, c) in gl.iter() {
        let w = RankedWeight::new((0..r).map(|i| mu[i] - mu[i + 1]).collect())?;
        *out.entry(w).or_default() += c;
    }
    let total: BigInt = out.values().sum();
    let dim = weyl_dimension(lambda)?;
    if total != dim {
        return Err(Error::Consistency(format!(
            "finite character of {lambda} has {total} states, Weyl dimension is {dim}"
        )));
    }
    let out = Arc::new(out);
    finite_char_cache()
        .lock()
        .expect("cache poisoned")
        .insert(lambda.clone(), out.clone());
    Ok(out)
}

fn rho(r: usize) -> RankedWeight {
    RankedWeight::new(vec![1; r]).expect("rank is positive")
}

/// Decomposition of `V(λ) ⊗ V(μ)` by the Brauer-Klimyk rule.
pub fn tensor_product(lambda: &RankedWeight, mu: &RankedWeight) -> Result<BTreeMap<RankedWeight, u64>> {
    if lambda.rank() != mu.rank() {
        return Err(Error::InvalidArgument("tensor factors have different ranks".into()));
    }
    lambda.require_dominant()?;
    let r = lambda.rank();
    let shifted = lambda.add(&rho(r));
    let mut acc: BTreeMap<RankedWeight, BigInt> = BTreeMap::new();
    for (w, m) in finite_char(mu)?.iter() {
        let (dom, odd) = to_dominant(&shifted.add(w));
        if dom.coords().contains(&0) {
            continue;
        }
        let e = acc.entry(dom.sub(&rho(r))).or_default();
        if odd {
            *e -= m;
        } else {
            *e += m;
        }
    }
    let mut out = BTreeMap::new();
    for (nu, c) in acc {
        if c.is_negative() {
            return Err(Error::Consistency(format!(
                "negative multiplicity {c} of {nu} in {lambda} ⊗ {mu}"
            )));
        }
        if !c.is_zero() {
            let c = u64::try_from(&c).map_err(|_| Error::Consistency("multiplicity overflow".into()))?;
            out.insert(nu, c);
        }
    }
    Ok(out)
}

/// `Σ i(r+1-i) l_i`, proportional to the pairing with `2ρ`; strictly decreases along positive roots.
fn height_key(w: &RankedWeight) -> i64 {
    let r = w.rank() as i64;
    w.coords().iter().enumerate().map(|(i, l)| (i as i64 + 1) * (r - i as i64) * l).sum()
}

/// Product of finite characters.
pub fn product_char(factors: &[RankedWeight], r: usize) -> Result<WeightMultiplicities> {
    let mut cur = WeightMultiplicities::from([(RankedWeight::zero(r), BigInt::from(1))]);
    for f in factors {
        if f.rank() != r {
            return Err(Error::InvalidArgument("tensor factors have different ranks".into()));
        }
        let fc = finite_char(f)?;
        let mut next = WeightMultiplicities::new();
        for (w, m) in &cur {
            for (v, n) in fc.iter() {
                *next.entry(w.add(v)).or_default() += m * n;
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// Decomposition of `⊗_p V(μ_p)`: repeatedly strip the character of the
/// highest remaining dominant weight.
pub fn decompose_tensor(factors: &[RankedWeight], r: usize) -> Result<BTreeMap<RankedWeight, u64>> {
    let mut rest = product_char(factors, r)?;
    let mut out = BTreeMap::new();
    loop {
        rest.retain(|_, m| !m.is_zero());
        let Some((top, mult)) = rest
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .max_by_key(|(w, _)| (height_key(w), (*w).clone()))
            .map(|(w, m)| (w.clone(), m.clone()))
        else {
            break;
        };
        if mult.is_negative() {
            return Err(Error::Consistency(format!("negative multiplicity {mult} of {top}")));
        }
        for (w, m) in finite_char(&top)?.iter() {
            *rest.entry(w.clone()).or_default() -= &mult * m;
        }
        let c = u64::try_from(&mult).map_err(|_| Error::Consistency("multiplicity overflow".into()))?;
        out.insert(top, c);
    }
    if !rest.is_empty() {
        return Err(Error::Consistency("tensor product character did not decompose".into()));
    }
    Ok(out)
}

/// Multiplicity of `V(λ)` in `V(μ_1) ⊗ ... ⊗ V(μ_N)`.
pub fn lr_multiplicity(lambda: &RankedWeight, mus: &[RankedWeight]) -> Result<u64> {
    lambda.require_dominant()?;
    for m in mus {
        m.require_dominant()?;
    }
    Ok(decompose_tensor(mus, lambda.rank())?.get(lambda).copied().unwrap_or(0))
}

/// The factors `a ω_α` of a rectangle multiset.
pub fn rectangle_factors(rects: &RectangleMultiset) -> Vec<RankedWeight> {
    let r = rects.rank();
    rects
        .rects()
        .iter()
        .map(|&(alpha, a)| {
            let mut c = vec![0i64; r];
            c[alpha - 1] = a as i64;
            RankedWeight::new(c).expect("rank is positive")
        })
        .collect()
}

/// A semistandard tableau in English notation, rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemistandardTableau {
    rows: Vec<Vec<u64>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let rows: Vec<Vec<u64>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidArgument(format!("row {i} is not weakly increasing")));
            }
            if row.contains(&0) {
                return Err(Error::InvalidArgument("entries start at 1".into()));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() || row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidArgument(format!("column condition fails in row {i}")));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn shape(&self) -> PartitionShape {
        PartitionShape::new(self.rows.iter().map(|r| r.len() as u64).collect()).expect("rows weakly shorten")
    }

    /// Rows read left to right, from the bottom row up.
    pub fn reading_word(&self) -> Vec<u64> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn charge(&self) -> Result<u64> {
        charge(&self.reading_word())
    }
}

/// All tableaux of shape `lambda` and partition content `mu`.
pub fn semistandard_tableaux(lambda: &PartitionShape, mu: &PartitionShape) -> Vec<SemistandardTableau> {
    if lambda.size() != mu.size() {
        return Vec::new();
    }
    let len = lambda.len();
    let target: Vec<u64> = lambda.parts().to_vec();
    let mut out = Vec::new();
    // Each letter fills a horizontal strip; chain[i] is the shape after letter i.
    fn rec(
        letter: usize,
        mu: &[u64],
        target: &[u64],
        cur: Vec<u64>,
        chain: &mut Vec<Vec<u64>>,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if letter == mu.len() {
            if cur == target {
                let mut rows = vec![Vec::new(); target.len()];
                for (i, shape) in chain.iter().enumerate() {
                    let prev = if i == 0 { vec![0; target.len()] } else { chain[i - 1].clone() };
                    for (j, row) in rows.iter_mut().enumerate() {
                        row.extend(std::iter::repeat_n(i as u64 + 1, (shape[j] - prev[j]) as usize));
                    }
                }
                out.push(SemistandardTableau::new(rows).expect("strips give a tableau"));
            }
            return;
        }
        let mut next = cur.clone();
        fn strip(
            j: usize,
            left: u64,
            cur: &[u64],
            next: &mut Vec<u64>,
            target: &[u64],
            f: &mut dyn FnMut(Vec<u64>),
        ) {
            if j == cur.len() {
                if left == 0 {
                    f(next.clone());
                }
                return;
            }
            // Row j may grow up to the old length of row j-1 and up to the target.
            let cap = if j == 0 { target[0] } else { cur[j - 1].min(target[j]) };
            let room = cap.saturating_sub(cur[j]).min(left);
            for add in 0..=room {
                next[j] = cur[j] + add;
                strip(j + 1, left - add, cur, next, target, f);
            }
            next[j] = cur[j];
        }
        let mut shapes = Vec::new();
        strip(0, mu[letter], &cur, &mut next, target, &mut |s| shapes.push(s));
        for s in shapes {
            chain.push(s.clone());
            rec(letter + 1, mu, target, s, chain, out);
            chain.pop();
        }
    }
    rec(0, mu.parts(), &target, vec![0; len], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Lascoux-Schützenberger charge of a word whose content is a partition.
pub fn charge(word: &[u64]) -> Result<u64> {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut content = vec![0usize; max + 1];
    for &x in word {
        content[x as usize] += 1;
    }
    if word.contains(&0) || (2..=max).any(|i| content[i] > content[i - 1]) {
        return Err(Error::InvalidArgument("word content is not a partition".into()));
    }
    let n = word.len();
    let mut used = vec![false; n];
    let mut total = 0u64;
    let mut remaining = n;
    while remaining > 0 {
        // Standard subword: from the right end, scan leftward cyclically for 1, 2, ...
        let mut pos = n;
        let mut index = 0u64;
        let mut letter = 1u64;
        loop {
            let found = (1..=n).map(|step| (pos + n - step) % n).find(|&p| !used[p] && word[p] == letter);
            let Some(p) = found else { break };
            // Found to the right of the previous letter means the scan wrapped.
            if p > pos {
                index += 1;
            }
            total += index;
            used[p] = true;
            remaining -= 1;
            pos = p;
            letter += 1;
        }
    }
    Ok(total)
}

/// `K_{λμ}(q) = Σ_T q^{charge(T)}`.
pub fn charge_kostka(lambda: &PartitionShape, mu: &PartitionShape) -> Result<LaurentPolynomial> {
    let mut out = LaurentPolynomial::zero();
    for t in semistandard_tableaux(lambda, mu) {
        out = &out + &LaurentPolynomial::monomial(t.charge()? as i64, 1);
    }
    Ok(out)
}

/// `Σ_T q^{n(μ) - charge(T)}`.
pub fn cocharge_kostka(lambda: &PartitionShape, mu: &PartitionShape) -> Result<LaurentPolynomial> {
    let nmu = mu.n_statistic() as i64;
    let mut out = LaurentPolynomial::zero();
    for t in semistandard_tableaux(lambda, mu) {
        out = &out + &LaurentPolynomial::monomial(nmu - t.charge()? as i64, 1);
    }
    Ok(out)
}

/// Every partition of `n` as a content list, largest first.
pub fn contents_of(n: u64) -> Vec<PartitionShape> {
    partitions_of(n, n, n as usize)
}

/// `ch V_Λ` at level `k` from the Weyl-Kac formula, graded by `-d` with the
/// highest weight at degree 0.
pub fn weyl_kac_char(lambda: &RankedWeight, k: u64, max_degree: i64) -> Result<WeightGradedCharacter> {
    let r = lambda.rank();
    if r == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    lambda.require_restricted(k as i64)?;
    if max_degree < 0 {
        return Err(Error::InvalidArgument(format!("max degree {max_degree} is negative")));
    }
    let d = max_degree as usize;
    let kh = k as i64 + r as i64 + 1;
    let c = cartan_matrix(r);
    // Alternating numerator over translations t_γ, γ = Σ g_i α_i, divided by the finite Weyl denominator.
    let shifted: Vec<i64> = lambda.coords().iter().map(|l| l + 1).collect();
    let form = crate::lattice::QuadraticForm::new(
        c.iter().map(|row| row.iter().map(|x| x * kh).collect()).collect(),
        shifted.iter().map(|x| -x).collect(),
        1,
        vec![None; r],
    )?;
    let mut table: HashMap<RankedWeight, Vec<BigInt>> = HashMap::new();
    for p in form.points_up_to_checked(max_degree)? {
        let t = affine_translate(&AffineWeightLabel::highest(RankedWeight::new(shifted.clone())?, kh), &p.z);
        if 2 * t.delta as i128 != p.twice_scaled_value {
            return Err(Error::Consistency(format!("translation degree mismatch at {:?}", p.z)));
        }
        let deg = t.delta as usize;
        let mu = t.finite;
        let (dom, odd) = to_dominant(&mu);
        if dom.coords().contains(&0) {
            continue;
        }
        let hw = dom.sub(&rho(r));
        for (w, m) in finite_char(&hw)?.iter() {
            let v = table.entry(w.clone()).or_insert_with(|| vec![BigInt::zero(); d + 1]);
            if odd {
                v[deg] -= m;
            } else {
                v[deg] += m;
            }
        }
    }
    // Remaining denominator: ∏_{n≥1} ∏_{β ∈ Δ} 1/(1 - q^n e^β).
    let mut roots = Vec::new();
    for i in 0..r {
        for j in i..r {
            let mut beta = vec![0i64; r];
            for t in i..=j {
                beta[t] = 1;
            }
            let b = RankedWeight::new(mat_vec(&c, &beta))?;
            roots.push(b.clone());
            roots.push(RankedWeight::zero(r).sub(&b));
        }
    }
    for n in 1..=d {
        for beta in &roots {
            for deg in n..=d {
                let adds: Vec<(RankedWeight, BigInt)> = table
                    .iter()
                    .filter(|(_, v)| !v[deg - n].is_zero())
                    .map(|(w, v)| (w.add(beta), v[deg - n].clone()))
                    .collect();
                for (w, val) in adds {
                    table.entry(w).or_insert_with(|| vec![BigInt::zero(); d + 1])[deg] += val;
                }
            }
        }
    }
    let eta = inverse_pochhammer_series(PochhammerOrder::Infinite, max_degree);
    let mut eta_r = TruncatedSeries::one(max_degree);
    for _ in 0..r {
        eta_r = &eta_r * &eta;
    }
    let out: BTreeMap<RankedWeight, TruncatedSeries> = table
        .into_iter()
        .map(|(w, v)| {
            let s = TruncatedSeries::from_coefficients(&v, max_degree);
            (w, &s * &eta_r)
        })
        .filter(|(_, s)| !s.is_zero())
        .collect();
    Ok(finish(r, k, max_degree, Formula::WeylKac, lambda.clone(), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> RankedWeight {
        RankedWeight::new(c.to_vec()).unwrap()
    }

    fn p(c: &[u64]) -> PartitionShape {
        PartitionShape::new(c.to_vec()).unwrap()
    }

    #[test]
    fn finite_dimensions() {
        for c in [[1, 0], [1, 1], [2, 1], [0, 3], [2, 2]] {
            let lam = w(&c);
            let total: BigInt = finite_char(&lam).unwrap().values().sum();
            assert_eq!(total, weyl_dimension(&lam).unwrap());
        }
        let adj = finite_char(&w(&[1, 1])).unwrap();
        assert_eq!(adj[&w(&[0, 0])], BigInt::from(2));
    }

    #[test]
    fn tensor_sl3() {
        let t = tensor_product(&w(&[1, 0]), &w(&[0, 1])).unwrap();
        assert_eq!(t, BTreeMap::from([(w(&[0, 0]), 1), (w(&[1, 1]), 1)]));
        let t = tensor_product(&w(&[1, 1]), &w(&[1, 1])).unwrap();
        assert_eq!(t[&w(&[1, 1])], 2);
        assert_eq!(t.values().sum::<u64>(), 6);
        let rects = RectangleMultiset::new(2, vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(lr_multiplicity(&w(&[1, 0]), &rectangle_factors(&rects)).unwrap(), 1);
        let rows = RectangleMultiset::single_rows(2, &[1, 1, 1]).unwrap();
        assert_eq!(lr_multiplicity(&w(&[1, 1]), &rectangle_factors(&rows)).unwrap(), 2);
        assert_eq!(lr_multiplicity(&w(&[1, 1]), &rectangle_factors(&rows)).unwrap(), 2);
    }

    #[test]
    fn lr_examples() {
        let w3 = |c: [i64; 3]| w(&c);
        assert_eq!(lr_multiplicity(&w3([0, 0, 0]), &[w3([1, 0, 0]), w3([0, 0, 1])]).unwrap(), 1);
        assert_eq!(
            lr_multiplicity(&w3([0, 2, 0]), &[w3([1, 0, 0]), w3([0, 2, 0]), w3([0, 0, 1])]).unwrap(),
            2
        );
        assert_eq!(lr_multiplicity(&w3([1, 2, 1]), &[w3([1, 2, 1])]).unwrap(), 1);
        let t = decompose_tensor(&[w(&[1, 1]), w(&[1, 1])], 2).unwrap();
        assert_eq!(t, tensor_product(&w(&[1, 1]), &w(&[1, 1])).unwrap());
    }

    #[test]
    fn tableaux_count() {
        assert_eq!(semistandard_tableaux(&p(&[2, 1]), &p(&[1, 1, 1])).len(), 2);
        assert_eq!(semistandard_tableaux(&p(&[3, 2]), &p(&[2, 2, 1])).len(), 2);
        assert_eq!(semistandard_tableaux(&p(&[2]), &p(&[1, 1, 1])).len(), 0);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(charge(&[3, 2, 1]).unwrap(), 0);
        assert_eq!(charge_kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), LaurentPolynomial::from_terms([(1, 1), (2, 1)]));
        assert_eq!(charge_kostka(&p(&[3]), &p(&[1, 1, 1])).unwrap(), LaurentPolynomial::monomial(3, 1));
        assert_eq!(charge_kostka(&p(&[1, 1, 1]), &p(&[1, 1, 1])).unwrap(), LaurentPolynomial::one());
        assert_eq!(cocharge_kostka(&p(&[1, 1, 1]), &p(&[1, 1, 1])).unwrap(), LaurentPolynomial::monomial(3, 1));
        assert_eq!(charge_kostka(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(), LaurentPolynomial::from_terms([(1, 1), (2, 1)]));
        assert_eq!(charge_kostka(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(), LaurentPolynomial::q());
        assert!(charge(&[2, 2, 1]).is_err());
    }

    #[test]
    fn weyl_kac_sl2_level_one() {
        let ch = weyl_kac_char(&w(&[0]), 1, 5).unwrap();
        let partitions = [1, 1, 2, 3, 5, 7];
        for (d, &pn) in partitions.iter().enumerate() {
            assert_eq!(ch.coefficient(&w(&[0]), d as i64), BigInt::from(pn));
        }
        assert_eq!(ch.coefficient(&w(&[2]), 1), BigInt::from(1));
        assert_eq!(ch.coefficient(&w(&[4]), 4), BigInt::from(1));
    }
}
