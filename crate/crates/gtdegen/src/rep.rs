//! Realizes L_lambda inside the tensor product U_lambda of fundamental
//! representations, applies ordered monomials M_T, and computes the induced
//! filtrations and graded dimensions for a Pluecker-variable grading.

use crate::error::{Error, Result};
use crate::lie::{
    all_pairs, all_tuples, f_on_tuple, weight_of_tuple, PairIndex, PlueckerIndex, Weight,
};
use crate::linalg::{rat, Echelon, Rat, SparseMatrix, SparseVec, TrackedEchelon};
use crate::polytope::{pi_lambda, ThetaPoint, DEFAULT_POINT_BUDGET};
use num_traits::One;
use std::collections::BTreeMap;

/// Default cap on dim L_lambda for the expensive computations.
pub const DEFAULT_DIM_CAP: usize = 3000;

const TENSOR_SPACE_CAP: usize = 2_000_000;

/// Integer functional on Theta points, one value per pair 1 <= i < j <= n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightingA {
    n: usize,
    a: BTreeMap<(usize, usize), i64>,
}

impl WeightingA {
    pub fn new(n: usize, entries: BTreeMap<(usize, usize), i64>) -> Self {
        for &(i, j) in entries.keys() {
            assert!(1 <= i && i < j && j <= n, "pair out of bounds");
        }
        WeightingA { n, a: entries }
    }

    pub fn zero(n: usize) -> Self {
        WeightingA {
            n,
            a: BTreeMap::new(),
        }
    }

    /// Values listed in row-major pair order (1,2),(1,3),...,(1,n),(2,3),...
    pub fn from_row_major(n: usize, values: &[i64]) -> Result<Self> {
        let pairs = all_pairs(n);
        if values.len() != pairs.len() {
            return Err(Error::BadInput(format!(
                "expected {} weights for n={}, got {}",
                pairs.len(),
                n,
                values.len()
            )));
        }
        let mut a = BTreeMap::new();
        for (p, &v) in pairs.iter().zip(values) {
            a.insert((p.i, p.j), v);
        }
        Ok(WeightingA { n, a })
    }

    pub fn to_row_major(&self) -> Vec<i64> {
        all_pairs(self.n)
            .iter()
            .map(|p| self.get(p.i, p.j))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(1 <= i && i < j && j <= self.n, "pair out of bounds");
        self.a.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert!(1 <= i && i < j && j <= self.n, "pair out of bounds");
        self.a.insert((i, j), v);
    }

    /// Value of the functional on a Theta point.
    pub fn of(&self, t: &ThetaPoint) -> i64 {
        t.support().map(|(&(i, j), &v)| v * self.get(i, j)).sum()
    }
}

/// Integer grading of the Pluecker variables, one value per index tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingS {
    n: usize,
    s: BTreeMap<PlueckerIndex, i64>,
}

impl GradingS {
    pub fn new(n: usize, s: BTreeMap<PlueckerIndex, i64>) -> Self {
        GradingS { n, s }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, idx: &PlueckerIndex) -> i64 {
        *self
            .s
            .get(idx)
            .unwrap_or_else(|| panic!("grading not defined at {idx}"))
    }

    pub fn set(&mut self, idx: PlueckerIndex, v: i64) {
        self.s.insert(idx, v);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&PlueckerIndex, &i64)> {
        self.s.iter()
    }
}

/// Basis key of U_lambda: one index tuple per tensor slot, slot lengths
/// determined by lambda.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorKey(pub Vec<PlueckerIndex>);

impl TensorKey {
    pub fn slots(&self) -> &[PlueckerIndex] {
        &self.0
    }
}

/// Slot lengths of U_lambda: a_1 slots of length 1, then a_2 of length 2, ...
pub fn tensor_shape(lambda: &Weight) -> Vec<usize> {
    let mut shape = Vec::new();
    for k in 1..lambda.n() {
        for _ in 0..lambda.coord(k) {
            shape.push(k);
        }
    }
    shape
}

/// Highest weight vector u_lambda, a single key with every slot at (1,...,k).
pub fn highest_weight_tensor(lambda: &Weight) -> SparseVec<TensorKey> {
    let key = TensorKey(
        tensor_shape(lambda)
            .iter()
            .map(|&k| PlueckerIndex::new((1..=k).collect()))
            .collect(),
    );
    SparseVec::unit(key)
}

/// Slot-wise derivation action of f_{i,j} on a single key.
pub fn apply_f_key(p: PairIndex, key: &TensorKey) -> Vec<(TensorKey, i64)> {
    let mut out = Vec::new();
    for (slot, idx) in key.0.iter().enumerate() {
        if let Some((img, sign)) = f_on_tuple(p, idx) {
            let mut slots = key.0.clone();
            slots[slot] = img;
            out.push((TensorKey(slots), sign));
        }
    }
    out
}

/// Linear extension of the f_{i,j} action to tensor vectors.
pub fn apply_f(p: PairIndex, v: &SparseVec<TensorKey>) -> SparseVec<TensorKey> {
    let mut out = SparseVec::zero();
    for (key, coeff) in v.iter() {
        for (img, sign) in apply_f_key(p, key) {
            out.add_term(img, coeff * rat(sign));
        }
    }
    out
}

/// Applies the ordered monomial M_T: factors with larger first index act
/// first; equal first indices commute.
pub fn apply_m_t(t: &ThetaPoint, v: &SparseVec<TensorKey>) -> SparseVec<TensorKey> {
    assert!(t.is_nonnegative());
    let n = t.n();
    let mut v = v.clone();
    for i in (1..n).rev() {
        for j in i + 1..=n {
            for _ in 0..t.get(i, j) {
                if v.is_zero() {
                    return v;
                }
                v = apply_f(PairIndex::new(i, j), &v);
            }
        }
    }
    v
}

/// Same monomial with the factors ordered by second index decreasing from
/// left to right (the mirror ordering).
pub fn apply_m_t_dual(t: &ThetaPoint, v: &SparseVec<TensorKey>) -> SparseVec<TensorKey> {
    assert!(t.is_nonnegative());
    let n = t.n();
    let mut v = v.clone();
    for j in 2..=n {
        for i in 1..j {
            for _ in 0..t.get(i, j) {
                if v.is_zero() {
                    return v;
                }
                v = apply_f(PairIndex::new(i, j), &v);
            }
        }
    }
    v
}

/// h-weight of a tensor key.
pub fn weight_of_key(n: usize, key: &TensorKey) -> Weight {
    let mut w = Weight::zero(n);
    for idx in key.slots() {
        w = w.add(&weight_of_tuple(n, idx));
    }
    w
}

/// grad^S of a tensor key: the sum of the grading over its slots.
pub fn grad_s_of_key(s: &GradingS, key: &TensorKey) -> i64 {
    key.slots().iter().map(|idx| s.get(idx)).sum()
}

/// Interned basis of U_lambda with per-key weights. Keys are sorted, so key
/// ids are a canonical order.
pub struct TensorSpace {
    n: usize,
    lambda: Weight,
    keys: Vec<TensorKey>,
    weights: Vec<Weight>,
}

impl TensorSpace {
    pub fn build(lambda: &Weight) -> Result<TensorSpace> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(format!("{:?}", lambda.coords())));
        }
        let n = lambda.n();
        let shape = tensor_shape(lambda);
        let mut size: usize = 1;
        for &k in &shape {
            let c = all_tuples(n, k).len();
            size = size.saturating_mul(c);
            if size > TENSOR_SPACE_CAP {
                return Err(Error::DimGuard {
                    what: "dim U_lambda",
                    value: size,
                    cap: TENSOR_SPACE_CAP,
                });
            }
        }
        let mut keys = vec![TensorKey(Vec::new())];
        for &k in &shape {
            let tuples = all_tuples(n, k);
            let mut next = Vec::with_capacity(keys.len() * tuples.len());
            for key in &keys {
                for t in &tuples {
                    let mut slots = key.0.clone();
                    slots.push(t.clone());
                    next.push(TensorKey(slots));
                }
            }
            keys = next;
        }
        // cartesian product in slot-major order is already sorted
        debug_assert!(keys.len() < 2 || keys.windows(2).all(|w| w[0] < w[1]));
        let weights = keys.iter().map(|k| weight_of_key(n, k)).collect();
        Ok(TensorSpace {
            n,
            lambda: lambda.clone(),
            keys,
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    pub fn key(&self, id: usize) -> &TensorKey {
        &self.keys[id]
    }

    pub fn weight(&self, id: usize) -> &Weight {
        &self.weights[id]
    }

    pub fn index_of(&self, key: &TensorKey) -> usize {
        self.keys.binary_search(key).expect("key not in this space")
    }

    pub fn hw_vector(&self) -> SparseVec<usize> {
        let hw = highest_weight_tensor(&self.lambda);
        let (key, _) = hw.leading().unwrap();
        SparseVec::unit(self.index_of(key))
    }

    pub fn intern(&self, v: &SparseVec<TensorKey>) -> SparseVec<usize> {
        v.map_keys(|k| self.index_of(k))
    }

    pub fn extern_vec(&self, v: &SparseVec<usize>) -> SparseVec<TensorKey> {
        v.map_keys(|id| self.keys[*id].clone())
    }

    pub fn apply_f(&self, p: PairIndex, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::zero();
        for (id, coeff) in v.iter() {
            for (img, sign) in apply_f_key(p, &self.keys[*id]) {
                out.add_term(self.index_of(&img), coeff * rat(sign));
            }
        }
        out
    }

    pub fn apply_m_t(&self, t: &ThetaPoint, v: &SparseVec<usize>) -> SparseVec<usize> {
        assert!(t.is_nonnegative());
        let mut v = v.clone();
        for i in (1..self.n).rev() {
            for j in i + 1..=self.n {
                for _ in 0..t.get(i, j) {
                    if v.is_zero() {
                        return v;
                    }
                    v = self.apply_f(PairIndex::new(i, j), &v);
                }
            }
        }
        v
    }

    /// Splits a vector into h-weight homogeneous components.
    pub fn weight_components(&self, v: &SparseVec<usize>) -> BTreeMap<Weight, SparseVec<usize>> {
        let mut out: BTreeMap<Weight, SparseVec<usize>> = BTreeMap::new();
        for (id, coeff) in v.iter() {
            out.entry(self.weights[*id].clone())
                .or_default()
                .add_term(*id, coeff.clone());
        }
        out
    }

    /// Weight of a nonzero weight-homogeneous vector.
    pub fn weight_of_vec(&self, v: &SparseVec<usize>) -> Result<Weight> {
        let mut it = v.iter();
        let Some((first, _)) = it.next() else {
            return Err(Error::MixedWeights);
        };
        let w = self.weights[*first].clone();
        for (id, _) in it {
            if self.weights[*id] != w {
                return Err(Error::MixedWeights);
            }
        }
        Ok(w)
    }
}

/// The monomial basis data of L_lambda: the set Pi_lambda in canonical order,
/// the vectors M_T u_lambda as columns, and per-weight solvers that express
/// arbitrary elements of L_lambda in this basis.
pub struct RepBasis {
    pub space: TensorSpace,
    pub pi: Vec<ThetaPoint>,
    pub columns: Vec<SparseVec<usize>>,
    pub rank: usize,
    blocks: BTreeMap<Weight, TrackedEchelon<usize>>,
    col_weights: Vec<Weight>,
}

impl RepBasis {
    pub fn build(lambda: &Weight, dim_cap: usize) -> Result<RepBasis> {
        let dim = lambda.weyl_dim()? as usize;
        if dim > dim_cap {
            return Err(Error::DimGuard {
                what: "dim L_lambda",
                value: dim,
                cap: dim_cap,
            });
        }
        let space = TensorSpace::build(lambda)?;
        let pi_set = pi_lambda(lambda, DEFAULT_POINT_BUDGET)?;
        let pi: Vec<ThetaPoint> = pi_set.iter().cloned().collect();
        let hw = space.hw_vector();
        let mut columns = Vec::with_capacity(pi.len());
        let mut col_weights = Vec::with_capacity(pi.len());
        let mut blocks: BTreeMap<Weight, TrackedEchelon<usize>> = BTreeMap::new();
        let mut rank = 0usize;
        for (ti, t) in pi.iter().enumerate() {
            let col = space.apply_m_t(t, &hw);
            let w = space
                .weight_of_vec(&col)
                .unwrap_or_else(|_| panic!("M_T u_lambda not weight homogeneous at {t}"));
            if blocks
                .entry(w.clone())
                .or_default()
                .insert(ti, col.clone())
                .is_none()
            {
                rank += 1;
            }
            columns.push(col);
            col_weights.push(w);
        }
        Ok(RepBasis {
            space,
            pi,
            columns,
            rank,
            blocks,
            col_weights,
        })
    }

    pub fn lambda(&self) -> &Weight {
        self.space.lambda()
    }

    pub fn dim(&self) -> usize {
        self.pi.len()
    }

    pub fn pi_index(&self, t: &ThetaPoint) -> Option<usize> {
        self.pi.binary_search(t).ok()
    }

    pub fn column_weight(&self, idx: usize) -> &Weight {
        &self.col_weights[idx]
    }

    /// The matrix whose columns are M_T u_lambda over T in Pi_lambda, rows
    /// indexed by the tensor keys of U_lambda.
    pub fn to_sparse_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.space.dim(), &self.columns)
    }

    /// Expresses a vector of L_lambda in the basis {M_T u_lambda}; None when
    /// the vector lies outside the span.
    pub fn express(&self, v: &SparseVec<usize>) -> Option<SparseVec<usize>> {
        let mut out = SparseVec::zero();
        for (w, comp) in self.space.weight_components(v) {
            let block = self.blocks.get(&w)?;
            let combo = block.express(&comp)?;
            out.add_scaled(&combo, &Rat::one());
        }
        Some(out)
    }
}

/// Span of the repeated action of all f_{i,j} on the highest weight vector,
/// kept as one echelon per h-weight. Independent realization of L_lambda.
pub struct ClosureSpan {
    pub dim: usize,
    blocks: BTreeMap<Weight, Echelon<usize>>,
}

impl ClosureSpan {
    pub fn contains(&self, space: &TensorSpace, v: &SparseVec<usize>) -> bool {
        for (w, comp) in space.weight_components(v) {
            match self.blocks.get(&w) {
                Some(ech) => {
                    if !ech.contains(&comp) {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }
}

/// Closes the highest weight vector under all f_{i,j}.
pub fn closure_span(space: &TensorSpace) -> ClosureSpan {
    let pairs = all_pairs(space.n());
    let mut blocks: BTreeMap<Weight, Echelon<usize>> = BTreeMap::new();
    let hw = space.hw_vector();
    let mut frontier = Vec::new();
    blocks
        .entry(space.lambda().clone())
        .or_default()
        .insert(hw.clone());
    frontier.push(hw);
    let mut dim = 1usize;
    while let Some(v) = frontier.pop() {
        for &p in &pairs {
            let img = space.apply_f(p, &v);
            if img.is_zero() {
                continue;
            }
            let w = space
                .weight_of_vec(&img)
                .expect("f image weight homogeneous");
            if blocks.entry(w).or_default().insert(img.clone()) {
                dim += 1;
                frontier.push(img);
            }
        }
    }
    ClosureSpan { dim, blocks }
}

/// Pivot histogram of L_lambda eliminated against the key order
/// (grad^S descending, key ascending). `dim_at(m)` counts pivots of grading
/// at most m, which is dim (L_lambda)_m; the histogram itself gives the
/// graded dimensions of the associated graded space.
pub struct FiltrationProfile {
    pub pivot_grades: BTreeMap<i64, usize>,
    pub dim: usize,
}

impl FiltrationProfile {
    pub fn dim_at(&self, m: i64) -> usize {
        self.pivot_grades
            .iter()
            .filter(|(&g, _)| g <= m)
            .map(|(_, &c)| c)
            .sum()
    }

    pub fn grades(&self) -> Vec<i64> {
        self.pivot_grades.keys().copied().collect()
    }
}

pub fn filtration_profile(rb: &RepBasis, s: &GradingS) -> FiltrationProfile {
    let space = &rb.space;
    let grads: Vec<i64> = (0..space.dim())
        .map(|id| grad_s_of_key(s, space.key(id)))
        .collect();
    // eliminate per weight block with keys ordered by grading descending
    let mut by_weight: BTreeMap<&Weight, Vec<usize>> = BTreeMap::new();
    for (ci, w) in rb.col_weights.iter().enumerate() {
        by_weight.entry(w).or_default().push(ci);
    }
    let mut pivot_grades: BTreeMap<i64, usize> = BTreeMap::new();
    let mut dim = 0usize;
    for cols in by_weight.values() {
        let mut ech: Echelon<(i64, usize)> = Echelon::new();
        for &ci in cols {
            let remapped = rb.columns[ci].map_keys(|id| (-grads[*id], *id));
            if ech.insert(remapped) {
                dim += 1;
            }
        }
        for key in ech.pivot_keys() {
            *pivot_grades.entry(-key.0).or_insert(0) += 1;
        }
    }
    FiltrationProfile { pivot_grades, dim }
}

/// Basis of the filtration component (L_lambda)_m = L_lambda cap (U_lambda)_{<=m}.
pub fn filtration_space(rb: &RepBasis, s: &GradingS, m: i64) -> Vec<SparseVec<usize>> {
    let space = &rb.space;
    // kernel of the projection of the basis columns onto keys of grading > m
    let mut proj = SparseMatrix::new(space.dim(), rb.columns.len());
    for (ci, col) in rb.columns.iter().enumerate() {
        for (id, c) in col.iter() {
            if grad_s_of_key(s, space.key(*id)) > m {
                proj.set(*id, ci, c.clone());
            }
        }
    }
    let mut out = Vec::new();
    for combo in proj.kernel_basis() {
        let mut v = SparseVec::zero();
        for (ci, c) in combo.iter() {
            v.add_scaled(&rb.columns[*ci], c);
        }
        debug_assert!(v.keys().all(|id| grad_s_of_key(s, space.key(*id)) <= m));
        out.push(v);
    }
    out
}

/// Graded dimensions of the associated graded module for S = sigma(A).
pub fn graded_dims(rb: &RepBasis, a: &WeightingA) -> BTreeMap<i64, usize> {
    let s = crate::cone::sigma(a);
    filtration_profile(rb, &s).pivot_grades
}

/// Whether M_T reaches its filtration level exactly: M_T v_lambda has maximal
/// key grading equal to A(T). Errors when M_T annihilates the highest weight
/// vector.
pub fn is_optimal(t: &ThetaPoint, lambda: &Weight, a: &WeightingA) -> Result<bool> {
    let v = apply_m_t(t, &highest_weight_tensor(lambda));
    if v.is_zero() {
        return Err(Error::ZeroAction);
    }
    let s = crate::cone::sigma(a);
    let at = a.of(t);
    let max_grad = v
        .keys()
        .map(|k| grad_s_of_key(&s, k))
        .max()
        .expect("nonzero vector");
    assert!(max_grad <= at, "key grading exceeds deg^A of the monomial");
    Ok(max_grad == at)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, coords: &[i64]) -> Weight {
        Weight::new(n, coords.to_vec())
    }

    fn tp(n: usize, entries: &[(usize, usize, i64)]) -> ThetaPoint {
        ThetaPoint::from_coords(n, entries.iter().map(|&(i, j, v)| ((i, j), v)))
    }

    fn pidx(vals: &[usize]) -> PlueckerIndex {
        PlueckerIndex::new(vals.to_vec())
    }

    #[test]
    fn highest_weight_keys() {
        let hw = highest_weight_tensor(&w(3, &[1, 1]));
        let (key, c) = hw.leading().unwrap();
        assert_eq!(key.slots(), &[pidx(&[1]), pidx(&[1, 2])]);
        assert_eq!(*c, rat(1));
        let hw = highest_weight_tensor(&w(4, &[0, 1, 0]));
        assert_eq!(hw.leading().unwrap().0.slots(), &[pidx(&[1, 2])]);
    }

    #[test]
    fn apply_f_leibniz() {
        // f_{1,2} u_lambda for lambda=(1,1): the slot e_{1,2} is annihilated
        let hw = highest_weight_tensor(&w(3, &[1, 1]));
        let img = apply_f(PairIndex::new(1, 2), &hw);
        assert_eq!(img.len(), 1);
        let (key, c) = img.leading().unwrap();
        assert_eq!(key.slots(), &[pidx(&[2]), pidx(&[1, 2])]);
        assert_eq!(*c, rat(1));
        // zero in, zero out
        assert!(apply_f(PairIndex::new(1, 2), &SparseVec::zero()).is_zero());
    }

    #[test]
    fn f_squared_on_fundamental_tensor() {
        let hw = highest_weight_tensor(&w(3, &[0, 1]));
        let p = PairIndex::new(2, 3);
        let once = apply_f(p, &hw);
        assert!(apply_f(p, &once).is_zero());
    }

    #[test]
    fn m_t_examples() {
        let lam = w(3, &[0, 1]);
        let hw = highest_weight_tensor(&lam);
        // empty monomial
        assert_eq!(apply_m_t(&ThetaPoint::zero(3), &hw), hw);
        // M_{T(2,3)} v_{omega_2} = +- e_{2,3}
        let t23 = tp(3, &[(1, 2, 1), (2, 3, 1)]);
        let v = apply_m_t(&t23, &hw);
        assert_eq!(v.len(), 1);
        let (key, c) = v.leading().unwrap();
        assert_eq!(key.slots(), &[pidx(&[2, 3])]);
        assert!(*c == rat(1) || *c == rat(-1));
        // M_{00/1} v_{omega_2} = f_{1,3} e_{1,2} = -e_{2,3}
        let t = tp(3, &[(1, 3, 1)]);
        let v = apply_m_t(&t, &hw);
        let (key, c) = v.leading().unwrap();
        assert_eq!(key.slots(), &[pidx(&[2, 3])]);
        assert_eq!(*c, rat(-1));
    }

    #[test]
    fn grad_s_of_keys_from_sl3_example() {
        let a = WeightingA::from_row_major(3, &[-1, -1, -1]).unwrap();
        let s = crate::cone::sigma(&a);
        let key = TensorKey(vec![pidx(&[2]), pidx(&[1, 3])]);
        assert_eq!(grad_s_of_key(&s, &key), -2);
        let key = TensorKey(vec![pidx(&[1]), pidx(&[2, 3])]);
        assert_eq!(grad_s_of_key(&s, &key), -2);
        let key = TensorKey(vec![pidx(&[1]), pidx(&[1, 2])]);
        assert_eq!(grad_s_of_key(&s, &key), 0);
    }

    #[test]
    fn basis_matrix_ranks() {
        for (n, coords, expect) in [
            (3usize, vec![1i64, 0], 3u64),
            (3, vec![1, 1], 8),
            (4, vec![1, 1, 1], 64),
        ] {
            let lam = Weight::new(n, coords);
            let rb = RepBasis::build(&lam, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(rb.rank as u64, expect);
            assert_eq!(rb.dim() as u64, expect);
        }
    }

    #[test]
    fn closure_matches_basis_span() {
        for (n, coords) in [(3usize, vec![1i64, 1]), (4, vec![1, 0, 1])] {
            let lam = Weight::new(n, coords);
            let rb = RepBasis::build(&lam, DEFAULT_DIM_CAP).unwrap();
            let closure = closure_span(&rb.space);
            assert_eq!(closure.dim as u64, lam.weyl_dim().unwrap());
            for col in &rb.columns {
                assert!(closure.contains(&rb.space, col));
            }
        }
    }

    #[test]
    fn filtration_profile_sl3() {
        let lam = w(3, &[1, 1]);
        let a = WeightingA::from_row_major(3, &[-1, -1, -1]).unwrap();
        let rb = RepBasis::build(&lam, DEFAULT_DIM_CAP).unwrap();
        let prof = filtration_profile(&rb, &crate::cone::sigma(&a));
        assert_eq!(prof.dim, 8);
        // histogram of A over Pi_lambda: one point at 0, three at -1,
        // two at -2, two at -3
        let hist: Vec<(i64, usize)> = prof.pivot_grades.iter().map(|(&g, &c)| (g, c)).collect();
        assert_eq!(hist, vec![(-3, 2), (-2, 2), (-1, 3), (0, 1)]);
        let counts: BTreeMap<i64, usize> = rb.pi.iter().fold(BTreeMap::new(), |mut acc, t| {
            *acc.entry(a.of(t)).or_insert(0) += 1;
            acc
        });
        assert_eq!(prof.pivot_grades, counts);
    }

    #[test]
    fn filtration_space_matches_profile() {
        let lam = w(3, &[1, 1]);
        let a = WeightingA::from_row_major(3, &[-1, -1, -1]).unwrap();
        let s = crate::cone::sigma(&a);
        let rb = RepBasis::build(&lam, DEFAULT_DIM_CAP).unwrap();
        let prof = filtration_profile(&rb, &s);
        for m in -4..=1i64 {
            let basis = filtration_space(&rb, &s, m);
            assert_eq!(basis.len(), prof.dim_at(m), "m={m}");
        }
        // very low cutoff empties the filtration, very high exhausts it
        assert!(filtration_space(&rb, &s, -10).is_empty());
        assert_eq!(filtration_space(&rb, &s, 10).len(), 8);
    }

    #[test]
    fn optimality() {
        let lam = w(3, &[1, 1]);
        let a = WeightingA::from_row_major(3, &[-1, -1, -1]).unwrap();
        for t in pi_lambda(&lam, DEFAULT_POINT_BUDGET).unwrap().iter() {
            assert!(is_optimal(t, &lam, &a).unwrap(), "t={t}");
        }
        // the non-vertex monomial reaching e_{2,3} is not optimal
        let omega2 = w(3, &[0, 1]);
        let t = tp(3, &[(1, 3, 1)]);
        assert!(!is_optimal(&t, &omega2, &a).unwrap());
        // t=0 is always optimal
        assert!(is_optimal(&ThetaPoint::zero(3), &lam, &a).unwrap());
        // monomials annihilating v_lambda error out
        let t = tp(3, &[(1, 2, 2)]);
        assert!(is_optimal(&t, &w(3, &[1, 0]), &a).is_err());
    }

    #[test]
    fn graded_dims_total() {
        let lam = w(3, &[1, 1]);
        let a = WeightingA::from_row_major(3, &[-1, -1, -1]).unwrap();
        let rb = RepBasis::build(&lam, DEFAULT_DIM_CAP).unwrap();
        let dims = graded_dims(&rb, &a);
        let total: usize = dims.values().sum();
        assert_eq!(total as u64, lam.weyl_dim().unwrap());
        // zero weight: single graded piece at level 0
        let zero = w(3, &[0, 0]);
        let rb0 = RepBasis::build(&zero, DEFAULT_DIM_CAP).unwrap();
        let dims0 = graded_dims(&rb0, &a);
        assert_eq!(dims0, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn dim_guard_trips() {
        let lam = w(4, &[2, 2, 2]);
        assert!(matches!(
            RepBasis::build(&lam, 100),
            Err(Error::DimGuard { .. })
        ));
    }

    #[test]
    fn sparse_matrix_rank_agrees_with_blocks() {
        let lam = w(3, &[1, 1]);
        let rb = RepBasis::build(&lam, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(rb.to_sparse_matrix().rank(), rb.rank);
    }

    /// Brute force over every monomial reaching a fixed wedge vector: the
    /// weighted degree is minimized by the vertex monomial; with strict
    /// inequalities the minimum is unique, and ties always have larger sq.
    #[test]
    fn fundamental_degree_bounds() {
        use crate::cone::{random_in_k, sigma, strict_interior};
        use crate::lie::{all_tuples, simple_root_coords, weight_of_tuple};
        use crate::polytope::t_of_tuple;
        use num_traits::ToPrimitive;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for n in 3..=4usize {
            let weightings = vec![
                strict_interior(n),
                random_in_k(n, &mut rng),
                random_in_k(n, &mut rng),
            ];
            for k in 1..n {
                let omega = Weight::fundamental(n, k);
                let hw = highest_weight_tensor(&omega);
                for idx in all_tuples(n, k) {
                    let vertex = t_of_tuple(n, &idx);
                    // exponent caps from the simple root coordinates of the
                    // weight drop
                    let gap = omega.sub(&weight_of_tuple(n, &idx));
                    let caps: Vec<i64> = simple_root_coords(&gap)
                        .iter()
                        .map(|c| c.to_integer().to_i64().unwrap())
                        .collect();
                    // enumerate all tables within the caps
                    let pairs = crate::lie::all_pairs(n);
                    let mut tables = vec![ThetaPoint::zero(n)];
                    for p in &pairs {
                        let cap = (p.i..p.j).map(|l| caps[l - 1]).min().unwrap_or(0);
                        let mut next = Vec::new();
                        for t in &tables {
                            for e in 0..=cap {
                                let mut t2 = t.clone();
                                t2.set(p.i, p.j, e);
                                next.push(t2);
                            }
                        }
                        tables = next;
                    }
                    for t in tables {
                        let v = apply_m_t(&t, &hw);
                        if v.is_zero() {
                            continue;
                        }
                        // reaches +-e_idx?
                        let (key, _) = v.leading().unwrap();
                        if key.slots() != [idx.clone()] {
                            continue;
                        }
                        for a in &weightings {
                            let s = sigma(a);
                            let s_idx = s.get(&idx);
                            let deg = a.of(&t);
                            assert!(deg >= s_idx, "degree bound fails at {t} for {idx}");
                            if t != vertex && deg == s_idx {
                                assert!(
                                    t.sq() > vertex.sq(),
                                    "sq tie-break fails at {t} for {idx}"
                                );
                            }
                        }
                        // strict inequalities force the vertex to be the
                        // unique minimizer
                        let strict = strict_interior(n);
                        if t != vertex {
                            assert!(
                                strict.of(&t) > sigma(&strict).get(&idx),
                                "strict minimality fails at {t} for {idx}"
                            );
                        }
                    }
                }
            }
        }
    }
}
