//! sl_n combinatorics: weights in fundamental coordinates, roots, the cones
//! c(k), the Weyl dimension formula and root vector actions on wedge bases
//! of fundamental representations.

use crate::error::{Error, Result};
use crate::linalg::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An sl_n weight in fundamental-weight coordinates (a_1, ..., a_{n-1}).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    n: usize,
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(n: usize, coords: Vec<i64>) -> Self {
        assert!(n >= 2, "n must be at least 2");
        assert_eq!(coords.len(), n - 1, "weight needs n-1 coordinates");
        Weight { n, coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight::new(n, vec![0; n - 1])
    }

    pub fn fundamental(n: usize, k: usize) -> Self {
        assert!((1..n).contains(&k));
        let mut coords = vec![0; n - 1];
        coords[k - 1] = 1;
        Weight::new(n, coords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> i64 {
        self.coords[k - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }

    /// Partition parts lambda_i = a_i + ... + a_{n-1}, with lambda_n = 0.
    pub fn parts(&self) -> Vec<i64> {
        let mut parts = vec![0i64; self.n];
        for i in (0..self.n - 1).rev() {
            parts[i] = parts[i + 1] + self.coords[i];
        }
        parts
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.n, other.n);
        Weight::new(
            self.n,
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.n, other.n);
        Weight::new(
            self.n,
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Image under the Dynkin diagram flip, omega_k -> omega_{n-k}.
    pub fn reversed(&self) -> Weight {
        let mut coords = self.coords.clone();
        coords.reverse();
        Weight::new(self.n, coords)
    }

    /// Exact dimension of the irreducible with this highest weight.
    pub fn weyl_dim(&self) -> Result<u64> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(format!("{:?}", self.coords)));
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 1..self.n {
            for j in i + 1..=self.n {
                let height: i128 = (i..j).map(|l| self.coords[l - 1] as i128 + 1).sum();
                num *= BigInt::from(height);
                den *= BigInt::from((j - i) as i64);
            }
        }
        let (q, r) = num_integer_div_rem(num, den);
        assert!(r.is_zero(), "Weyl dimension must be an integer");
        q.to_u64()
            .ok_or_else(|| Error::BadInput("dimension does not fit in u64".into()))
    }
}

fn num_integer_div_rem(a: BigInt, b: BigInt) -> (BigInt, BigInt) {
    let q = &a / &b;
    let r = &a - &q * &b;
    (q, r)
}

/// A pair 1 <= i < j <= n indexing a negative root vector f_{i,j}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "pair index requires 1 <= i < j");
        PairIndex { i, j }
    }
}

/// All pairs 1 <= i < j <= n in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<PairIndex> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            out.push(PairIndex::new(i, j));
        }
    }
    out
}

/// A strictly increasing tuple (i_1, ..., i_k) with values in 1..=n, k < n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlueckerIndex(Vec<usize>);

impl PlueckerIndex {
    pub fn new(tuple: Vec<usize>) -> Self {
        assert!(!tuple.is_empty(), "empty tuple");
        assert!(
            tuple.windows(2).all(|w| w[0] < w[1]),
            "tuple must be strictly increasing"
        );
        assert!(tuple[0] >= 1);
        PlueckerIndex(tuple)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl std::fmt::Display for PlueckerIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// All strictly increasing k-tuples in 1..=n, lexicographic.
pub fn all_tuples(n: usize, k: usize) -> Vec<PlueckerIndex> {
    assert!(k >= 1 && k <= n);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<PlueckerIndex>) {
        if cur.len() == k {
            out.push(PlueckerIndex::new(cur.clone()));
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

/// Simple root alpha_l in fundamental coordinates (a row of the Cartan matrix).
pub fn simple_root(n: usize, l: usize) -> Weight {
    assert!((1..n).contains(&l));
    let mut coords = vec![0i64; n - 1];
    coords[l - 1] = 2;
    if l >= 2 {
        coords[l - 2] = -1;
    }
    if l < n - 1 {
        coords[l] = -1;
    }
    Weight::new(n, coords)
}

/// Positive root alpha_{i,j} = alpha_i + ... + alpha_{j-1}.
pub fn root(n: usize, p: PairIndex) -> Weight {
    let mut w = Weight::zero(n);
    for l in p.i..p.j {
        w = w.add(&simple_root(n, l));
    }
    w
}

/// Coordinates of a weight in the simple root basis, as exact rationals.
pub fn simple_root_coords(w: &Weight) -> Vec<Rat> {
    // Solve the tridiagonal Cartan system exactly by forward elimination.
    let r = w.n() - 1;
    let mut diag: Vec<Rat> = Vec::with_capacity(r);
    let mut rhs: Vec<Rat> = Vec::with_capacity(r);
    for l in 0..r {
        let mut d = Rat::from_integer(BigInt::from(2));
        let mut b = Rat::from_integer(BigInt::from(w.coords()[l]));
        if l > 0 {
            // add 1/diag[l-1] times the previous row to clear the -1 below it
            let factor = diag[l - 1].recip();
            d += &factor * Rat::from_integer(BigInt::from(-1));
            b += &factor * rhs[l - 1].clone();
        }
        diag.push(d);
        rhs.push(b);
    }
    let mut coords = vec![Rat::zero(); r];
    for l in (0..r).rev() {
        let mut b = rhs[l].clone();
        if l + 1 < r {
            b -= Rat::from_integer(BigInt::from(-1)) * coords[l + 1].clone();
        }
        coords[l] = b / diag[l].clone();
    }
    coords
}

/// True iff `diff` is a nonnegative integer combination of the simple roots
/// alpha_l with l >= k and no others.
pub fn in_cone_c(n: usize, k: usize, diff: &Weight) -> bool {
    assert!((1..n).contains(&k));
    assert_eq!(diff.n(), n);
    let coords = simple_root_coords(diff);
    for (idx, c) in coords.iter().enumerate() {
        let l = idx + 1;
        if !c.is_integer() || c.is_negative() {
            return false;
        }
        if l < k && !c.is_zero() {
            return false;
        }
    }
    true
}

/// Weight of the wedge basis vector e_{i_1, ..., i_k}.
pub fn weight_of_tuple(n: usize, idx: &PlueckerIndex) -> Weight {
    let mut coords = vec![0i64; n - 1];
    for &m in idx.values() {
        // epsilon_m = omega_m - omega_{m-1}
        if m < n {
            coords[m - 1] += 1;
        }
        if m >= 2 {
            coords[m - 2] -= 1;
        }
    }
    Weight::new(n, coords)
}

/// Linear extension of the root vector action to wedge vectors.
pub fn f_on_wedge(
    p: PairIndex,
    v: &crate::linalg::SparseVec<PlueckerIndex>,
) -> crate::linalg::SparseVec<PlueckerIndex> {
    let mut out = crate::linalg::SparseVec::zero();
    for (idx, coeff) in v.iter() {
        if let Some((img, sign)) = f_on_tuple(p, idx) {
            out.add_term(img, coeff * crate::linalg::rat(sign));
        }
    }
    out
}

/// Action of f_{i,j} (the matrix unit E_{j,i}, extended as a derivation) on a
/// wedge basis vector; returns the image tuple and its sign, or None when the
/// action is zero.
pub fn f_on_tuple(p: PairIndex, idx: &PlueckerIndex) -> Option<(PlueckerIndex, i64)> {
    if !idx.contains(p.i) || idx.contains(p.j) {
        return None;
    }
    let mut values: Vec<usize> = idx.values().to_vec();
    let pos = values.iter().position(|&v| v == p.i).unwrap();
    values[pos] = p.j;
    // bubble into place, tracking the permutation sign
    let mut sign = 1i64;
    let mut pos = pos;
    while pos + 1 < values.len() && values[pos] > values[pos + 1] {
        values.swap(pos, pos + 1);
        sign = -sign;
        pos += 1;
    }
    Some((PlueckerIndex::new(values), sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_dim_small() {
        assert_eq!(Weight::new(3, vec![1, 0]).weyl_dim().unwrap(), 3);
        assert_eq!(Weight::new(3, vec![1, 1]).weyl_dim().unwrap(), 8);
        assert_eq!(Weight::new(4, vec![1, 1, 1]).weyl_dim().unwrap(), 64);
    }

    #[test]
    fn weyl_dim_fundamentals_are_binomials() {
        fn binom(n: u64, k: u64) -> u64 {
            let mut r = 1u64;
            for t in 0..k {
                r = r * (n - t) / (t + 1);
            }
            r
        }
        for n in 2..=6usize {
            for k in 1..n {
                assert_eq!(
                    Weight::fundamental(n, k).weyl_dim().unwrap(),
                    binom(n as u64, k as u64),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn weyl_dim_rejects_negative() {
        assert!(Weight::new(3, vec![-1, 0]).weyl_dim().is_err());
    }

    #[test]
    fn parts_from_coords() {
        assert_eq!(Weight::new(3, vec![1, 1]).parts(), vec![2, 1, 0]);
    }

    #[test]
    fn f_on_wedge_examples() {
        // f_{1,2} e_1 = e_2
        let (t, s) = f_on_tuple(PairIndex::new(1, 2), &PlueckerIndex::new(vec![1])).unwrap();
        assert_eq!((t.values(), s), (&[2usize][..], 1));
        // f_{1,3} e_{1,2} = -e_{2,3}
        let (t, s) = f_on_tuple(PairIndex::new(1, 3), &PlueckerIndex::new(vec![1, 2])).unwrap();
        assert_eq!((t.values(), s), (&[2usize, 3][..], -1));
        // f_{2,3} e_{1,3} = 0
        assert!(f_on_tuple(PairIndex::new(2, 3), &PlueckerIndex::new(vec![1, 3])).is_none());
    }

    #[test]
    fn f_on_wedge_linear_extension() {
        use crate::linalg::{rat, SparseVec};
        let v: SparseVec<PlueckerIndex> = SparseVec::from_terms([
            (PlueckerIndex::new(vec![1, 2]), rat(2)),
            (PlueckerIndex::new(vec![1, 3]), rat(5)),
        ]);
        // f_{1,3}: e_{1,2} -> -e_{2,3}, e_{1,3} -> 0
        let img = f_on_wedge(PairIndex::new(1, 3), &v);
        assert_eq!(img.len(), 1);
        assert_eq!(img.get(&PlueckerIndex::new(vec![2, 3])), rat(-2));
        assert!(f_on_wedge(PairIndex::new(1, 2), &SparseVec::zero()).is_zero());
    }

    #[test]
    fn f_squared_annihilates_wedges() {
        for n in 2..=5usize {
            for k in 1..n {
                for idx in all_tuples(n, k) {
                    for p in all_pairs(n) {
                        if let Some((t, _)) = f_on_tuple(p, &idx) {
                            assert!(f_on_tuple(p, &t).is_none(), "n={n} p={p:?} idx={idx}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cone_membership() {
        let n = 3;
        let zero = Weight::zero(n);
        assert!(in_cone_c(n, 1, &zero));
        assert!(in_cone_c(n, 2, &zero));
        let a1 = simple_root(n, 1);
        assert_eq!(a1.coords(), &[2, -1]);
        assert!(!in_cone_c(n, 2, &a1));
        let a2 = simple_root(n, 2);
        assert_eq!(a2.coords(), &[-1, 2]);
        assert!(in_cone_c(n, 2, &a2));
        // fractional combinations are rejected
        assert!(!in_cone_c(n, 1, &Weight::fundamental(n, 1)));
    }

    #[test]
    fn cone_k1_is_root_lattice_cone() {
        // random small weights: membership for k=1 iff all simple root coords
        // are nonnegative integers
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                let w = Weight::new(3, vec![a, b]);
                let coords = simple_root_coords(&w);
                let expect = coords.iter().all(|c| c.is_integer() && !c.is_negative());
                assert_eq!(in_cone_c(3, 1, &w), expect);
            }
        }
    }

    #[test]
    fn weight_of_tuples() {
        // e_{1,...,k} is the highest weight omega_k
        for n in 2..=5usize {
            for k in 1..n {
                let idx = PlueckerIndex::new((1..=k).collect());
                assert_eq!(weight_of_tuple(n, &idx), Weight::fundamental(n, k));
            }
        }
        // f_{i,j} shifts weight by -alpha_{i,j}
        let n = 4;
        for k in 1..n {
            for idx in all_tuples(n, k) {
                for p in all_pairs(n) {
                    if let Some((t, _)) = f_on_tuple(p, &idx) {
                        assert_eq!(
                            weight_of_tuple(n, &t),
                            weight_of_tuple(n, &idx).sub(&root(n, p))
                        );
                    }
                }
            }
        }
    }
}
