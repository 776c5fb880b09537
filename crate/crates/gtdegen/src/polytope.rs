//! Lattice combinatorics: the points T(i_1,...,i_k), Minkowski sums Pi_lambda,
//! the inequality systems P_lambda and GT_lambda, the unimodular map psi,
//! lattice point enumeration and the weighted sum sq(T).

use crate::error::{Error, Result};
use crate::lie::{all_tuples, PlueckerIndex, Weight};
use std::collections::BTreeSet;

/// Default cap on intermediate Minkowski sum sizes.
pub const DEFAULT_POINT_BUDGET: usize = 100_000;

/// Integer point of Theta = Z^{1 <= i < j <= n}. Zero coordinates are stored
/// implicitly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaPoint {
    n: usize,
    coords: std::collections::BTreeMap<(usize, usize), i64>,
}

impl ThetaPoint {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2);
        ThetaPoint {
            n,
            coords: Default::default(),
        }
    }

    pub fn from_coords<I: IntoIterator<Item = ((usize, usize), i64)>>(n: usize, iter: I) -> Self {
        let mut t = ThetaPoint::zero(n);
        for ((i, j), v) in iter {
            t.set(i, j, v);
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(1 <= i && i < j && j <= self.n, "pair out of bounds");
        self.coords.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        assert!(1 <= i && i < j && j <= self.n, "pair out of bounds");
        if value == 0 {
            self.coords.remove(&(i, j));
        } else {
            self.coords.insert((i, j), value);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (&(usize, usize), &i64)> {
        self.coords.iter()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.values().all(|&v| v >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Total of all coordinates.
    pub fn total(&self) -> i64 {
        self.coords.values().sum()
    }

    pub fn add(&self, other: &ThetaPoint) -> ThetaPoint {
        assert_eq!(self.n, other.n);
        let mut t = self.clone();
        for ((i, j), v) in other.coords.iter() {
            let cur = t.get(*i, *j);
            t.set(*i, *j, cur + v);
        }
        t
    }

    pub fn sub(&self, other: &ThetaPoint) -> ThetaPoint {
        assert_eq!(self.n, other.n);
        let mut t = self.clone();
        for ((i, j), v) in other.coords.iter() {
            let cur = t.get(*i, *j);
            t.set(*i, *j, cur - v);
        }
        t
    }

    /// sq(T) = sum of T_{i,j} (j-i)^2.
    pub fn sq(&self) -> i64 {
        self.coords
            .iter()
            .map(|(&(i, j), &v)| v * ((j - i) as i64).pow(2))
            .sum()
    }
}

impl std::fmt::Display for ThetaPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n == 3 {
            // conventional n=3 layout: T12 T23 / T13
            return write!(
                f,
                "{}{}/{}",
                self.get(1, 2),
                self.get(2, 3),
                self.get(1, 3)
            );
        }
        let parts: Vec<String> = (1..self.n)
            .flat_map(|i| (i + 1..=self.n).map(move |j| (i, j)))
            .map(|(i, j)| format!("{}", self.get(i, j)))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Finite set of Theta points sharing the same n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSet {
    n: usize,
    points: BTreeSet<ThetaPoint>,
}

impl LatticeSet {
    pub fn new(n: usize) -> Self {
        LatticeSet {
            n,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points<I: IntoIterator<Item = ThetaPoint>>(n: usize, iter: I) -> Self {
        let mut s = LatticeSet::new(n);
        for p in iter {
            s.insert(p);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, p: ThetaPoint) {
        assert_eq!(p.n(), self.n);
        self.points.insert(p);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ThetaPoint) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ThetaPoint> {
        self.points.iter()
    }

    pub fn map(&self, f: impl Fn(&ThetaPoint) -> ThetaPoint) -> LatticeSet {
        LatticeSet::from_points(self.n, self.points.iter().map(f))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let points: Vec<serde_json::Value> = self
            .points
            .iter()
            .map(|p| {
                let pairs: Vec<serde_json::Value> = p
                    .support()
                    .map(|(&(i, j), &v)| serde_json::json!([i, j, v]))
                    .collect();
                serde_json::json!({ "pairs": pairs })
            })
            .collect();
        serde_json::json!({ "n": self.n, "points": points })
    }
}

/// The vertex T(i_1,...,i_k): coordinate (l, i_l) is 1 whenever i_l > l.
pub fn t_of_tuple(n: usize, idx: &PlueckerIndex) -> ThetaPoint {
    assert!(idx.len() < n, "tuple length must be below n");
    let mut t = ThetaPoint::zero(n);
    for (pos, &v) in idx.values().iter().enumerate() {
        let l = pos + 1;
        if v > l {
            t.set(l, v, 1);
        }
    }
    t
}

/// Vertex set Pi_{omega_k}.
pub fn pi_fundamental(n: usize, k: usize) -> LatticeSet {
    LatticeSet::from_points(n, all_tuples(n, k).iter().map(|idx| t_of_tuple(n, idx)))
}

/// Minkowski sum of two lattice sets with a size guard.
pub fn minkowski_sum(a: &LatticeSet, b: &LatticeSet, budget: usize) -> Result<LatticeSet> {
    assert_eq!(a.n(), b.n());
    if a.len().saturating_mul(b.len()) > budget.saturating_mul(64) {
        return Err(Error::PointBudget {
            points: a.len().saturating_mul(b.len()),
            budget: budget * 64,
        });
    }
    let mut out = LatticeSet::new(a.n());
    for p in a.iter() {
        for q in b.iter() {
            out.insert(p.add(q));
        }
    }
    if out.len() > budget {
        return Err(Error::PointBudget {
            points: out.len(),
            budget,
        });
    }
    Ok(out)
}

/// Pi_lambda as the iterated Minkowski sum of fundamental vertex sets.
pub fn pi_lambda(lambda: &Weight, budget: usize) -> Result<LatticeSet> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(format!("{:?}", lambda.coords())));
    }
    let n = lambda.n();
    let mut acc = LatticeSet::from_points(n, [ThetaPoint::zero(n)]);
    for k in 1..n {
        let fk = pi_fundamental(n, k);
        for _ in 0..lambda.coord(k) {
            acc = minkowski_sum(&acc, &fk, budget)?;
        }
    }
    Ok(acc)
}

/// Membership in the polytope P_lambda: nonnegativity plus the row sums
/// sum_{l>=j} T_{i,l} - sum_{l>=j+1} T_{i+1,l} <= a_i.
pub fn p_lambda_contains(lambda: &Weight, t: &ThetaPoint) -> bool {
    let n = lambda.n();
    assert_eq!(t.n(), n);
    if !t.is_nonnegative() {
        return false;
    }
    for i in 1..n {
        for j in i + 1..=n {
            let mut lhs = 0i64;
            for l in j..=n {
                lhs += t.get(i, l);
            }
            for l in j + 1..=n {
                lhs -= t.get(i + 1, l);
            }
            if lhs > lambda.coord(i) {
                return false;
            }
        }
    }
    true
}

/// Membership in the Gelfand-Tsetlin polytope GT_lambda.
pub fn gt_contains(lambda: &Weight, t: &ThetaPoint) -> bool {
    let n = lambda.n();
    assert_eq!(t.n(), n);
    let parts = lambda.parts();
    for i in 1..n {
        let v = t.get(i, i + 1);
        if !(parts[i - 1] >= v && v >= parts[i]) {
            return false;
        }
    }
    for i in 1..n {
        for j in i + 2..=n {
            let v = t.get(i, j);
            if !(t.get(i, j - 1) >= v && v >= t.get(i + 1, j)) {
                return false;
            }
        }
    }
    true
}

/// The affine unimodular map psi(T)_{i,j} = lambda_i - sum_{l >= i+n+1-j} T_{i,l}.
pub fn psi(lambda: &Weight, t: &ThetaPoint) -> ThetaPoint {
    let n = lambda.n();
    assert_eq!(t.n(), n);
    let parts = lambda.parts();
    let mut out = ThetaPoint::zero(n);
    for i in 1..n {
        for j in i + 1..=n {
            let start = i + n + 1 - j;
            let mut v = parts[i - 1];
            for l in start..=n {
                v -= t.get(i, l);
            }
            out.set(i, j, v);
        }
    }
    out
}

/// Dense matrix of the linear part of psi, pairs ordered lexicographically.
pub fn psi_linear_matrix(n: usize) -> Vec<Vec<i64>> {
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let m = pairs.len();
    let mut mat = vec![vec![0i64; m]; m];
    for (r, &(i, j)) in pairs.iter().enumerate() {
        let start = i + n + 1 - j;
        for (c, &(i2, j2)) in pairs.iter().enumerate() {
            if i2 == i && j2 >= start {
                mat[r][c] = -1;
            }
        }
    }
    mat
}

/// Integer points of P_lambda enumerated from the coarse box T_{i,l} <= lambda_i.
pub fn lattice_points_p(lambda: &Weight, budget: usize) -> Result<LatticeSet> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(format!("{:?}", lambda.coords())));
    }
    let n = lambda.n();
    let parts = lambda.parts();
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = LatticeSet::new(n);
    let mut cur = ThetaPoint::zero(n);
    fn rec(
        pairs: &[(usize, usize)],
        pos: usize,
        parts: &[i64],
        lambda: &Weight,
        cur: &mut ThetaPoint,
        out: &mut LatticeSet,
        budget: usize,
    ) -> Result<()> {
        if pos == pairs.len() {
            if p_lambda_contains(lambda, cur) {
                out.insert(cur.clone());
                if out.len() > budget {
                    return Err(Error::PointBudget {
                        points: out.len(),
                        budget,
                    });
                }
            }
            return Ok(());
        }
        let (i, j) = pairs[pos];
        for v in 0..=parts[i - 1] {
            cur.set(i, j, v);
            rec(pairs, pos + 1, parts, lambda, cur, out, budget)?;
        }
        cur.set(i, j, 0);
        Ok(())
    }
    rec(&pairs, 0, &parts, lambda, &mut cur, &mut out, budget)?;
    Ok(out)
}

/// Integer points of GT_lambda by direct search with interlacing bounds.
pub fn gt_lattice_points(lambda: &Weight) -> LatticeSet {
    let n = lambda.n();
    let parts = lambda.parts();
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = LatticeSet::new(n);
    let mut cur = ThetaPoint::zero(n);
    fn rec(
        pairs: &[(usize, usize)],
        pos: usize,
        parts: &[i64],
        cur: &mut ThetaPoint,
        out: &mut LatticeSet,
    ) {
        if pos == pairs.len() {
            out.insert(cur.clone());
            return;
        }
        let (i, j) = pairs[pos];
        // upper bound from the same row, lower bound deferred to the row below
        let mut hi = if j == i + 1 {
            parts[i - 1]
        } else {
            cur.get(i, j - 1)
        };
        let mut lo = if j == i + 1 { parts[i] } else { 0 };
        if i >= 2 {
            hi = hi.min(cur.get(i - 1, j));
        }
        if j == i + 1 {
            lo = lo.max(parts[i]);
        }
        for v in lo..=hi {
            cur.set(i, j, v);
            rec(pairs, pos + 1, parts, cur, out);
        }
        cur.set(i, j, 0);
    }
    rec(&pairs, 0, &parts, &mut cur, &mut out);
    // the deferred lower bounds are enforced by a final filter
    LatticeSet::from_points(
        n,
        out.iter().filter(|t| gt_contains(lambda, t)).cloned(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::PlueckerIndex;
    use crate::linalg::{dense_det, rat, Rat};

    fn w(n: usize, coords: &[i64]) -> Weight {
        Weight::new(n, coords.to_vec())
    }

    fn tp(n: usize, entries: &[(usize, usize, i64)]) -> ThetaPoint {
        ThetaPoint::from_coords(n, entries.iter().map(|&(i, j, v)| ((i, j), v)))
    }

    #[test]
    fn t_of_tuple_examples() {
        assert!(t_of_tuple(3, &PlueckerIndex::new(vec![1])).is_zero());
        let t = t_of_tuple(3, &PlueckerIndex::new(vec![2, 3]));
        assert_eq!(t, tp(3, &[(1, 2, 1), (2, 3, 1)]));
        for n in 2..=5usize {
            for k in 1..n {
                let idx = PlueckerIndex::new((1..=k).collect());
                assert!(t_of_tuple(n, &idx).is_zero());
            }
        }
    }

    #[test]
    fn pi_omega1_n3() {
        let s = pi_fundamental(3, 1);
        let expect = LatticeSet::from_points(
            3,
            [
                ThetaPoint::zero(3),
                tp(3, &[(1, 2, 1)]),
                tp(3, &[(1, 3, 1)]),
            ],
        );
        assert_eq!(s, expect);
    }

    #[test]
    fn pi_lambda_eight_points() {
        let s = pi_lambda(&w(3, &[1, 1]), DEFAULT_POINT_BUDGET).unwrap();
        let expect: Vec<ThetaPoint> = [
            (0, 0, 0),
            (0, 1, 0),
            (1, 1, 0),
            (1, 0, 0),
            (2, 1, 0),
            (0, 0, 1),
            (0, 1, 1),
            (1, 1, 1),
        ]
        .iter()
        .map(|&(a, b, c)| tp(3, &[(1, 2, a), (2, 3, b), (1, 3, c)]))
        .collect();
        assert_eq!(s, LatticeSet::from_points(3, expect));
    }

    #[test]
    fn pi_lambda_two_zero() {
        let s = pi_lambda(&w(3, &[2, 0]), DEFAULT_POINT_BUDGET).unwrap();
        assert_eq!(s.len() as u64, w(3, &[2, 0]).weyl_dim().unwrap());
    }

    #[test]
    fn p_lambda_membership() {
        let lam = w(3, &[1, 1]);
        assert!(p_lambda_contains(&lam, &tp(3, &[(1, 2, 2), (2, 3, 1)])));
        let omega1 = w(3, &[1, 0]);
        assert!(!p_lambda_contains(&omega1, &tp(3, &[(2, 3, 1)])));
        assert!(p_lambda_contains(&lam, &ThetaPoint::zero(3)));
        assert!(p_lambda_contains(&w(3, &[0, 0]), &ThetaPoint::zero(3)));
    }

    #[test]
    fn gt_membership() {
        let lam = w(3, &[1, 1]);
        assert!(gt_contains(&lam, &tp(3, &[(1, 2, 2), (1, 3, 1)])));
        assert!(!gt_contains(&lam, &ThetaPoint::zero(3)));
        // boundary point with every inequality tight
        let parts = lam.parts();
        let mut t = ThetaPoint::zero(3);
        for i in 1..3 {
            t.set(i, i + 1, parts[i]);
        }
        t.set(1, 3, parts[1]);
        assert!(gt_contains(&lam, &t));
    }

    #[test]
    fn psi_examples() {
        let lam = w(3, &[1, 1]);
        let img = psi(&lam, &ThetaPoint::zero(3));
        assert_eq!(img, tp(3, &[(1, 2, 2), (2, 3, 1), (1, 3, 2)]));
        let img = psi(&lam, &tp(3, &[(1, 2, 1), (2, 3, 1)]));
        assert_eq!(img, tp(3, &[(1, 2, 2), (1, 3, 1)]));
        assert!(gt_contains(&lam, &img));
    }

    #[test]
    fn psi_linear_part_is_unimodular() {
        for n in 2..=5usize {
            let m = psi_linear_matrix(n);
            let m: Vec<Vec<Rat>> = m
                .into_iter()
                .map(|row| row.into_iter().map(rat).collect())
                .collect();
            let d = dense_det(m);
            assert!(d == rat(1) || d == rat(-1), "n={n} det={d}");
        }
    }

    #[test]
    fn lattice_points_match_pi() {
        for (n, coords) in [(3usize, vec![1i64, 1]), (3, vec![2, 0]), (4, vec![1, 0, 1])] {
            let lam = Weight::new(n, coords);
            let a = pi_lambda(&lam, DEFAULT_POINT_BUDGET).unwrap();
            let b = lattice_points_p(&lam, DEFAULT_POINT_BUDGET).unwrap();
            assert_eq!(a, b);
        }
        let zero = w(3, &[0, 0]);
        let pts = lattice_points_p(&zero, DEFAULT_POINT_BUDGET).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts.contains(&ThetaPoint::zero(3)));
    }

    #[test]
    fn lattice_points_n4_cube() {
        let lam = w(4, &[1, 1, 1]);
        let pts = lattice_points_p(&lam, DEFAULT_POINT_BUDGET).unwrap();
        assert_eq!(pts.len() as u64, lam.weyl_dim().unwrap());
    }

    #[test]
    fn psi_maps_pi_onto_gamma() {
        for (n, coords) in [(3usize, vec![1i64, 1]), (4, vec![1, 0, 1]), (4, vec![1, 1, 1])] {
            let lam = Weight::new(n, coords);
            let pi = pi_lambda(&lam, DEFAULT_POINT_BUDGET).unwrap();
            let gamma = gt_lattice_points(&lam);
            assert_eq!(pi.map(|t| psi(&lam, t)), gamma);
            assert_eq!(gamma.len(), pi.len());
        }
    }

    #[test]
    fn sq_examples() {
        assert_eq!(ThetaPoint::zero(3).sq(), 0);
        assert_eq!(tp(3, &[(1, 2, 1), (2, 3, 1)]).sq(), 2);
        assert_eq!(tp(3, &[(1, 3, 1)]).sq(), 4);
    }

    #[test]
    fn gamma_minkowski_additive() {
        let a = w(3, &[1, 0]);
        let b = w(3, &[0, 1]);
        let ga = gt_lattice_points(&a);
        let gb = gt_lattice_points(&b);
        let sum = minkowski_sum(&ga, &gb, DEFAULT_POINT_BUDGET).unwrap();
        assert_eq!(sum, gt_lattice_points(&a.add(&b)));
    }

    #[test]
    fn display_n3() {
        assert_eq!(tp(3, &[(1, 2, 2), (2, 3, 1)]).to_string(), "21/0");
    }
}
