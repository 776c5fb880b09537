//! The gated lowering algebra: word normal forms, its action on L_lambda and
//! on the associated graded modules, highest-weight-gated tensor products,
//! Cartan components, exponential orbit points, and the mirrored variant.

use crate::error::{Error, Result};
use crate::ideals::PlueckerMonomial;
use crate::lie::{all_pairs, in_cone_c, PairIndex, PlueckerIndex, Weight};
use crate::linalg::{rat, Rat, SparseVec};
use crate::polytope::ThetaPoint;
use crate::rep::{GradingS, RepBasis, TensorKey, WeightingA};
use num_traits::{One, Zero};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

/// Normal form of a word in the generators: zero or an exponent table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiNormal {
    Zero,
    Monomial(ThetaPoint),
}

fn exponent_table(n: usize, word: &[PairIndex]) -> ThetaPoint {
    let mut t = ThetaPoint::zero(n);
    for p in word {
        let cur = t.get(p.i, p.j);
        t.set(p.i, p.j, cur + 1);
    }
    t
}

/// A word vanishes iff its first-index sequence has a strict descent;
/// otherwise generators with equal first index commute into the normal
/// monomial with this exponent table.
pub fn phi_normal_form(n: usize, word: &[PairIndex]) -> PhiNormal {
    if word.windows(2).any(|w| w[0].i > w[1].i) {
        PhiNormal::Zero
    } else {
        PhiNormal::Monomial(exponent_table(n, word))
    }
}

/// Mirrored relations: products vanish on strict ascents of the second index,
/// generators with equal second index commute.
pub fn dual_phi_normal_form(n: usize, word: &[PairIndex]) -> PhiNormal {
    if word.windows(2).any(|w| w[0].j < w[1].j) {
        PhiNormal::Zero
    } else {
        PhiNormal::Monomial(exponent_table(n, word))
    }
}

/// Generator relabeling (i,j) -> (n+1-j, n+1-i) carrying one presentation
/// into the other (each letter also picks up a sign, which normal-form
/// vanishing does not see).
pub fn psi_relabel(n: usize, word: &[PairIndex]) -> Vec<PairIndex> {
    word.iter()
        .map(|p| PairIndex::new(n + 1 - p.j, n + 1 - p.i))
        .collect()
}

/// Gated action on a weight vector of L_lambda inside U_lambda: acts as
/// f_{i,j} when lambda minus the weight of v lies in the cone c(i), and as
/// zero otherwise. Errors when v mixes weights.
pub fn phi_act_l(
    lambda: &Weight,
    p: PairIndex,
    v: &SparseVec<TensorKey>,
) -> Result<SparseVec<TensorKey>> {
    if v.is_zero() {
        return Ok(SparseVec::zero());
    }
    let n = lambda.n();
    let mut it = v.iter();
    let w = crate::rep::weight_of_key(n, it.next().unwrap().0);
    for (key, _) in it {
        if crate::rep::weight_of_key(n, key) != w {
            return Err(Error::MixedWeights);
        }
    }
    if !in_cone_c(n, p.i, &lambda.sub(&w)) {
        return Ok(SparseVec::zero());
    }
    Ok(crate::rep::apply_f(p, v))
}

/// Gated ordered product applied to the highest weight vector of L_lambda.
pub fn phi_t_on_hw(lambda: &Weight, t: &ThetaPoint) -> SparseVec<TensorKey> {
    let mut v = crate::rep::highest_weight_tensor(lambda);
    let n = lambda.n();
    for i in (1..n).rev() {
        for j in i + 1..=n {
            for _ in 0..t.get(i, j) {
                if v.is_zero() {
                    return v;
                }
                v = phi_act_l(lambda, PairIndex::new(i, j), &v)
                    .expect("intermediate vectors are weight homogeneous");
            }
        }
    }
    v
}

/// Vector of the associated graded module, with one coordinate block per
/// grading level; coordinates are taken in the basis indexed by Pi_lambda.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedVector {
    pub components: BTreeMap<i64, SparseVec<usize>>,
}

impl GradedVector {
    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn flatten(&self) -> SparseVec<usize> {
        let mut out = SparseVec::zero();
        for comp in self.components.values() {
            out.add_scaled(comp, &Rat::one());
        }
        out
    }
}

/// Everything needed to run the degenerate action on one associated graded
/// module: the monomial basis of L_lambda, the weighting, per-point levels
/// and a memo of the generator action on basis vectors.
pub struct GradedCtx {
    pub rb: RepBasis,
    pub a: WeightingA,
    pub s: GradingS,
    pub levels: Vec<i64>,
    action_memo: RefCell<HashMap<(usize, usize, usize), SparseVec<usize>>>,
}

impl GradedCtx {
    pub fn build(lambda: &Weight, a: &WeightingA, dim_cap: usize) -> Result<GradedCtx> {
        let rb = RepBasis::build(lambda, dim_cap)?;
        let s = crate::cone::sigma(a);
        let levels = rb.pi.iter().map(|t| a.of(t)).collect();
        Ok(GradedCtx {
            rb,
            a: a.clone(),
            s,
            levels,
            action_memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn lambda(&self) -> &Weight {
        self.rb.lambda()
    }

    pub fn dim(&self) -> usize {
        self.rb.dim()
    }

    /// Index of T = 0, the class of the highest weight vector.
    pub fn hw_index(&self) -> usize {
        self.rb
            .pi_index(&ThetaPoint::zero(self.rb.space.n()))
            .expect("the zero point belongs to every Pi_lambda")
    }

    pub fn hw(&self) -> SparseVec<usize> {
        SparseVec::unit(self.hw_index())
    }

    /// Splits flat coordinates into graded components by level.
    pub fn grade(&self, v: &SparseVec<usize>) -> GradedVector {
        let mut components: BTreeMap<i64, SparseVec<usize>> = BTreeMap::new();
        for (ti, c) in v.iter() {
            components
                .entry(self.levels[*ti])
                .or_default()
                .add_term(*ti, c.clone());
        }
        GradedVector { components }
    }

    /// Action of one generator on a basis vector of the graded module: lift
    /// to M_T v_lambda, act through the gate, re-express in the monomial
    /// basis and keep the target filtration level.
    fn act_on_basis(&self, p: PairIndex, ti: usize) -> SparseVec<usize> {
        if let Some(hit) = self.action_memo.borrow().get(&(p.i, p.j, ti)) {
            return hit.clone();
        }
        let n = self.rb.space.n();
        let lambda = self.lambda().clone();
        let target = self.levels[ti] + self.a.get(p.i, p.j);
        let col = &self.rb.columns[ti];
        let gate = in_cone_c(n, p.i, &lambda.sub(self.rb.column_weight(ti)));
        let result = if !gate {
            SparseVec::zero()
        } else {
            let img = self.rb.space.apply_f(p, col);
            if img.is_zero() {
                SparseVec::zero()
            } else {
                let coords = self
                    .rb
                    .express(&img)
                    .expect("the action preserves L_lambda");
                let mut kept = SparseVec::zero();
                for (tj, c) in coords.iter() {
                    assert!(
                        self.levels[*tj] <= target,
                        "action escaped its filtration level"
                    );
                    if self.levels[*tj] == target {
                        kept.add_term(*tj, c.clone());
                    }
                }
                kept
            }
        };
        self.action_memo
            .borrow_mut()
            .insert((p.i, p.j, ti), result.clone());
        result
    }

    /// Generator action in graded form: each component is lifted, acted on
    /// and projected one level up by the generator's degree.
    pub fn act_graded(&self, p: PairIndex, gv: &GradedVector) -> GradedVector {
        let mut flat = SparseVec::zero();
        for comp in gv.components.values() {
            flat.add_scaled(&self.act(p, comp), &Rat::one());
        }
        self.grade(&flat)
    }

    /// phi^T applied to the class of the highest weight vector, in flat
    /// coordinates over Pi_lambda.
    pub fn phi_t_graded(&self, t: &ThetaPoint) -> SparseVec<usize> {
        phi_t_apply(self, t, &self.hw())
    }

    /// Orbit point exp(c) v^S in flat coordinates over Pi_lambda.
    pub fn exp_hw(&self, c: &BTreeMap<(usize, usize), Rat>) -> SparseVec<usize> {
        exp_apply(self, c, &self.hw())
    }

    /// Projection of M_T v_lambda to its exact filtration level, expressed in
    /// the graded basis; zero unless the monomial is optimal.
    pub fn project_m_t(&self, t: &ThetaPoint) -> SparseVec<usize> {
        let v = self.rb.space.apply_m_t(t, &self.rb.space.hw_vector());
        if v.is_zero() {
            return SparseVec::zero();
        }
        let target = self.a.of(t);
        let coords = self.rb.express(&v).expect("M_T v_lambda lies in L_lambda");
        let mut kept = SparseVec::zero();
        for (tj, c) in coords.iter() {
            assert!(self.levels[*tj] <= target);
            if self.levels[*tj] == target {
                kept.add_term(*tj, c.clone());
            }
        }
        kept
    }
}

/// A coordinate space with an action of the gated generators.
pub trait PhiModule {
    type Key: Ord + Clone;
    fn n(&self) -> usize;
    fn act(&self, p: PairIndex, v: &SparseVec<Self::Key>) -> SparseVec<Self::Key>;
}

impl PhiModule for GradedCtx {
    type Key = usize;

    fn n(&self) -> usize {
        self.rb.space.n()
    }

    fn act(&self, p: PairIndex, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::zero();
        for (ti, c) in v.iter() {
            out.add_scaled(&self.act_on_basis(p, *ti), c);
        }
        out
    }
}

/// Ordered monomial applied through any gated module action; factors with
/// larger first index act first.
pub fn phi_t_apply<M: PhiModule>(
    module: &M,
    t: &ThetaPoint,
    v: &SparseVec<M::Key>,
) -> SparseVec<M::Key> {
    assert!(t.is_nonnegative());
    let n = module.n();
    let mut v = v.clone();
    for i in (1..n).rev() {
        for j in i + 1..=n {
            for _ in 0..t.get(i, j) {
                if v.is_zero() {
                    return v;
                }
                v = module.act(PairIndex::new(i, j), &v);
            }
        }
    }
    v
}

/// Ordered product of exponentials exp(c_{i,j} phi_{i,j}) applied to a
/// vector; factors are ordered by first index increasing from left to right,
/// so the rightmost block acts first. Nilpotence truncates every series.
pub fn exp_apply<M: PhiModule>(
    module: &M,
    c: &BTreeMap<(usize, usize), Rat>,
    v: &SparseVec<M::Key>,
) -> SparseVec<M::Key> {
    fn rec<M: PhiModule>(
        module: &M,
        pairs: &[PairIndex],
        c: &BTreeMap<(usize, usize), Rat>,
        v: SparseVec<M::Key>,
    ) -> SparseVec<M::Key> {
        if v.is_zero() {
            return v;
        }
        let Some((&p, rest)) = pairs.split_first() else {
            return v;
        };
        let cp = c.get(&(p.i, p.j)).cloned().unwrap_or_else(Rat::zero);
        let mut out = SparseVec::zero();
        let mut power = v;
        let mut coeff = Rat::one();
        let mut order = 0u64;
        loop {
            let contrib = rec(module, rest, c, power.clone());
            out.add_scaled(&contrib, &coeff);
            if cp.is_zero() {
                break;
            }
            power = module.act(p, &power);
            if power.is_zero() {
                break;
            }
            order += 1;
            coeff = coeff * &cp / rat(order as i64);
        }
        out
    }
    let mut pairs = all_pairs(module.n());
    pairs.reverse();
    rec(module, &pairs, c, v.clone())
}

/// Tensor product of graded modules with the highest weight gate: a generator
/// acts by the Leibniz rule on keys whose weight defect lies in c(i), and by
/// zero elsewhere.
pub struct TensorCtx<'a> {
    pub factors: Vec<&'a GradedCtx>,
    pub total: Weight,
}

impl<'a> TensorCtx<'a> {
    pub fn new(factors: Vec<&'a GradedCtx>) -> TensorCtx<'a> {
        assert!(!factors.is_empty());
        let mut total = Weight::zero(factors[0].rb.space.n());
        for f in &factors {
            total = total.add(f.lambda());
        }
        TensorCtx { factors, total }
    }

    pub fn hw(&self) -> SparseVec<Vec<usize>> {
        SparseVec::unit(self.factors.iter().map(|f| f.hw_index()).collect())
    }

    pub fn weight_of_key(&self, key: &[usize]) -> Weight {
        let mut w = Weight::zero(self.n());
        for (f, &ti) in self.factors.iter().zip(key) {
            w = w.add(f.rb.column_weight(ti));
        }
        w
    }

    pub fn level_of_key(&self, key: &[usize]) -> i64 {
        self.factors
            .iter()
            .zip(key)
            .map(|(f, &ti)| f.levels[ti])
            .sum()
    }

    pub fn phi_t_on_hw(&self, t: &ThetaPoint) -> SparseVec<Vec<usize>> {
        phi_t_apply(self, t, &self.hw())
    }

    pub fn exp_hw(&self, c: &BTreeMap<(usize, usize), Rat>) -> SparseVec<Vec<usize>> {
        exp_apply(self, c, &self.hw())
    }
}

impl<'a> PhiModule for TensorCtx<'a> {
    type Key = Vec<usize>;

    fn n(&self) -> usize {
        self.factors[0].rb.space.n()
    }

    fn act(&self, p: PairIndex, v: &SparseVec<Vec<usize>>) -> SparseVec<Vec<usize>> {
        let n = self.n();
        let mut out = SparseVec::zero();
        for (key, coeff) in v.iter() {
            let defect = self.total.sub(&self.weight_of_key(key));
            if !in_cone_c(n, p.i, &defect) {
                continue;
            }
            for (slot, factor) in self.factors.iter().enumerate() {
                let img = factor.act_on_basis(p, key[slot]);
                for (tj, c2) in img.iter() {
                    let mut new_key = key.clone();
                    new_key[slot] = *tj;
                    out.add_term(new_key, coeff * c2);
                }
            }
        }
        out
    }
}

/// Dimension of the submodule generated by the tensor of the highest weight
/// classes: the rank of {phi^T (v^S (x) v^S)} over T in Pi_{lambda+mu}.
pub fn cartan_component_dim(
    ctx_lambda: &GradedCtx,
    ctx_mu: &GradedCtx,
    dim_cap: usize,
) -> Result<usize> {
    let lambda_mu = ctx_lambda.lambda().add(ctx_mu.lambda());
    let target_dim = lambda_mu.weyl_dim()? as usize;
    if target_dim > dim_cap {
        return Err(Error::DimGuard {
            what: "dim L_{lambda+mu}",
            value: target_dim,
            cap: dim_cap,
        });
    }
    let tensor = TensorCtx::new(vec![ctx_lambda, ctx_mu]);
    let pi = crate::polytope::pi_lambda(&lambda_mu, crate::polytope::DEFAULT_POINT_BUDGET)?;
    let mut memo: HashMap<ThetaPoint, SparseVec<Vec<usize>>> = HashMap::new();
    memo.insert(ThetaPoint::zero(tensor.n()), tensor.hw());
    let mut ech = crate::linalg::Echelon::new();
    let mut rank = 0usize;
    for t in pi.iter() {
        let v = phi_t_memo(&tensor, t, &mut memo);
        if !v.is_zero() && ech.insert(v) {
            rank += 1;
        }
    }
    Ok(rank)
}

/// phi^T on the highest weight tensor with shared partial products:
/// phi^T v = phi_p (phi^{T - e_p} v) for the first letter p of the monomial.
fn phi_t_memo(
    tensor: &TensorCtx<'_>,
    t: &ThetaPoint,
    memo: &mut HashMap<ThetaPoint, SparseVec<Vec<usize>>>,
) -> SparseVec<Vec<usize>> {
    if let Some(hit) = memo.get(t) {
        return hit.clone();
    }
    // the first letter is the leftmost factor, so it acts last
    let (&(i, j), _) = t.support().next().expect("nonzero exponent table");
    let mut prev = t.clone();
    prev.set(i, j, t.get(i, j) - 1);
    let inner = phi_t_memo(tensor, &prev, memo);
    let out = tensor.act(PairIndex::new(i, j), &inner);
    memo.insert(t.clone(), out.clone());
    out
}

/// Pluecker data of a fundamental graded basis vector: the index tuple and
/// the sign relating phi^T v^S to the wedge class.
pub fn fundamental_labels(ctx: &GradedCtx) -> Vec<(PlueckerIndex, i64)> {
    ctx.rb
        .columns
        .iter()
        .map(|col| {
            assert_eq!(col.len(), 1, "fundamental monomial vectors are single wedges");
            let (id, c) = col.leading().unwrap();
            let key = ctx.rb.space.key(*id);
            assert_eq!(key.slots().len(), 1);
            let sign = if c > &Rat::zero() { 1 } else { -1 };
            (key.slots()[0].clone(), sign)
        })
        .collect()
}

/// Kernel of the evaluation pairing between the monomials of R_lambda and the
/// submodule generated by the highest weight class in the tensor of
/// fundamental graded modules, returned as an ideal component in that degree.
pub fn pairing_kernel(
    lambda: &Weight,
    fundamentals: &BTreeMap<usize, GradedCtx>,
    cap: usize,
) -> Result<crate::ideals::IdealComponent> {
    let n = lambda.n();
    let shape = crate::rep::tensor_shape(lambda);
    let factors: Vec<&GradedCtx> = shape.iter().map(|k| &fundamentals[k]).collect();
    let labels: BTreeMap<usize, Vec<(PlueckerIndex, i64)>> = fundamentals
        .iter()
        .map(|(k, ctx)| (*k, fundamental_labels(ctx)))
        .collect();
    let tensor = TensorCtx::new(factors);
    let pi = crate::polytope::pi_lambda(lambda, crate::polytope::DEFAULT_POINT_BUDGET)?;
    let monomials = crate::ideals::r_lambda_monomials(n, lambda);
    if monomials.len() > cap {
        return Err(Error::DimGuard {
            what: "dim R_lambda",
            value: monomials.len(),
            cap,
        });
    }
    let mono_index: BTreeMap<PlueckerMonomial, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    // pairing matrix: rows indexed by Pi_lambda, columns by monomials
    let mut columns: Vec<SparseVec<usize>> = vec![SparseVec::zero(); monomials.len()];
    let mut memo: HashMap<ThetaPoint, SparseVec<Vec<usize>>> = HashMap::new();
    memo.insert(ThetaPoint::zero(n), tensor.hw());
    for (row, t) in pi.iter().enumerate() {
        let v = phi_t_memo(&tensor, t, &mut memo);
        for (key, coeff) in v.iter() {
            let mut sign = 1i64;
            let mut factors_of_monomial = Vec::with_capacity(key.len());
            for (slot, &ti) in key.iter().enumerate() {
                let (idx, s) = &labels[&shape[slot]][ti];
                factors_of_monomial.push(idx.clone());
                sign *= s;
            }
            let m = PlueckerMonomial::new(factors_of_monomial);
            let col = mono_index[&m];
            columns[col].add_term(row, coeff * rat(sign));
        }
    }
    let mut ech: crate::linalg::TrackedEchelon<usize> = crate::linalg::TrackedEchelon::new();
    let mut basis = Vec::new();
    for (mi, col) in columns.into_iter().enumerate() {
        if let Some(rel) = ech.insert(mi, col) {
            basis.push(rel);
        }
    }
    Ok(crate::ideals::IdealComponent::new(
        lambda.clone(),
        monomials,
        basis,
    ))
}

/// Orbit point coordinates as JSON: the basis label T and the exact
/// coordinate, for every nonzero coordinate.
pub fn orbit_to_json(ctx: &GradedCtx, v: &SparseVec<usize>) -> serde_json::Value {
    let coords: Vec<serde_json::Value> = v
        .iter()
        .map(|(ti, c)| {
            let t = &ctx.rb.pi[*ti];
            let pairs: Vec<serde_json::Value> = t
                .support()
                .map(|(&(i, j), &e)| serde_json::json!([i, j, e]))
                .collect();
            serde_json::json!({ "T": pairs, "value": c.to_string() })
        })
        .collect();
    serde_json::json!({ "coords": coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{pi_lambda, DEFAULT_POINT_BUDGET};
    use crate::rep::DEFAULT_DIM_CAP;

    fn w(n: usize, coords: &[i64]) -> Weight {
        Weight::new(n, coords.to_vec())
    }

    fn tp(n: usize, entries: &[(usize, usize, i64)]) -> ThetaPoint {
        ThetaPoint::from_coords(n, entries.iter().map(|&(i, j, v)| ((i, j), v)))
    }

    fn strict3() -> WeightingA {
        WeightingA::from_row_major(3, &[-1, -1, -1]).unwrap()
    }

    fn pair(i: usize, j: usize) -> PairIndex {
        PairIndex::new(i, j)
    }

    #[test]
    fn normal_forms() {
        // descent kills the word
        assert_eq!(
            phi_normal_form(3, &[pair(2, 3), pair(1, 2)]),
            PhiNormal::Zero
        );
        // equal first index commutes
        assert_eq!(
            phi_normal_form(3, &[pair(1, 3), pair(1, 2)]),
            PhiNormal::Monomial(tp(3, &[(1, 2, 1), (1, 3, 1)]))
        );
        // empty word is the unit
        assert_eq!(
            phi_normal_form(3, &[]),
            PhiNormal::Monomial(ThetaPoint::zero(3))
        );
    }

    #[test]
    fn dual_normal_forms() {
        assert_eq!(
            dual_phi_normal_form(3, &[pair(1, 2), pair(1, 3)]),
            PhiNormal::Zero
        );
        assert_eq!(
            dual_phi_normal_form(3, &[]),
            PhiNormal::Monomial(ThetaPoint::zero(3))
        );
        // descending second indices survive
        assert!(matches!(
            dual_phi_normal_form(3, &[pair(1, 3), pair(1, 2)]),
            PhiNormal::Monomial(_)
        ));
    }

    #[test]
    fn psi_transport() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 3..=5usize {
            let pairs = all_pairs(n);
            for _ in 0..200 {
                let len = rng.gen_range(0..5);
                let word: Vec<PairIndex> = (0..len)
                    .map(|_| pairs[rng.gen_range(0..pairs.len())])
                    .collect();
                let lhs = matches!(phi_normal_form(n, &word), PhiNormal::Zero);
                let rhs = matches!(
                    dual_phi_normal_form(n, &psi_relabel(n, &word)),
                    PhiNormal::Zero
                );
                assert_eq!(lhs, rhs, "word {word:?}");
            }
        }
    }

    #[test]
    fn gate_examples() {
        // phi_{1,2} v_lambda = f_{1,2} v_lambda
        let lam = w(3, &[1, 1]);
        let hw = crate::rep::highest_weight_tensor(&lam);
        let via_phi = phi_act_l(&lam, pair(1, 2), &hw).unwrap();
        let via_f = crate::rep::apply_f(pair(1, 2), &hw);
        assert_eq!(via_phi, via_f);
        // on L_{omega_1}: phi_{2,3} kills e_2 while f_{2,3} does not
        let omega1 = w(3, &[1, 0]);
        let e2 = crate::rep::apply_f(pair(1, 2), &crate::rep::highest_weight_tensor(&omega1));
        assert!(!crate::rep::apply_f(pair(2, 3), &e2).is_zero());
        assert!(phi_act_l(&omega1, pair(2, 3), &e2).unwrap().is_zero());
    }

    #[test]
    fn phi_t_matches_m_t_on_hw() {
        for (n, coords) in [(3usize, vec![1i64, 1]), (4, vec![1, 0, 1])] {
            let lam = Weight::new(n, coords);
            let hw = crate::rep::highest_weight_tensor(&lam);
            for t in pi_lambda(&lam, DEFAULT_POINT_BUDGET).unwrap().iter() {
                let via_phi = phi_t_on_hw(&lam, t);
                let via_m = crate::rep::apply_m_t(t, &hw);
                assert_eq!(via_phi, via_m, "t={t}");
            }
        }
    }

    #[test]
    fn graded_action_kills_nonoptimal() {
        // on L_{omega_2}^S with strict A, the non-vertex monomial 00/1 acts
        // as zero on the highest weight class
        let ctx = GradedCtx::build(&w(3, &[0, 1]), &strict3(), DEFAULT_DIM_CAP).unwrap();
        let t = tp(3, &[(1, 3, 1)]);
        assert!(ctx.phi_t_graded(&t).is_zero());
        assert!(ctx.project_m_t(&t).is_zero());
    }

    #[test]
    fn graded_basis_full_rank() {
        let lam = w(3, &[1, 1]);
        let ctx = GradedCtx::build(&lam, &strict3(), DEFAULT_DIM_CAP).unwrap();
        let mut ech = crate::linalg::Echelon::new();
        let mut rank = 0;
        for t in ctx.rb.pi.clone() {
            let v = ctx.phi_t_graded(&t);
            assert_eq!(v, ctx.project_m_t(&t), "t={t}");
            assert!(!v.is_zero());
            if ech.insert(v) {
                rank += 1;
            }
        }
        assert_eq!(rank, 8);
    }

    #[test]
    fn graded_vector_components_respect_levels() {
        let lam = w(3, &[1, 1]);
        let ctx = GradedCtx::build(&lam, &strict3(), DEFAULT_DIM_CAP).unwrap();
        let c: BTreeMap<(usize, usize), Rat> =
            [((1, 2), rat(2)), ((1, 3), rat(3)), ((2, 3), rat(5))]
                .into_iter()
                .collect();
        let orbit = ctx.exp_hw(&c);
        let graded = ctx.grade(&orbit);
        for (m, comp) in graded.components.iter() {
            for (ti, _) in comp.iter() {
                assert_eq!(ctx.levels[*ti], *m);
            }
        }
        assert_eq!(graded.flatten(), orbit);
    }

    #[test]
    fn exp_orbit_at_zero_is_hw() {
        let ctx = GradedCtx::build(&w(3, &[1, 1]), &strict3(), DEFAULT_DIM_CAP).unwrap();
        let orbit = ctx.exp_hw(&BTreeMap::new());
        assert_eq!(orbit, ctx.hw());
    }

    #[test]
    fn cartan_dims_sl3() {
        let a = strict3();
        let omega1 = GradedCtx::build(&w(3, &[1, 0]), &a, DEFAULT_DIM_CAP).unwrap();
        let omega2 = GradedCtx::build(&w(3, &[0, 1]), &a, DEFAULT_DIM_CAP).unwrap();
        let dim = cartan_component_dim(&omega1, &omega1, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(dim as u64, w(3, &[2, 0]).weyl_dim().unwrap());
        let dim = cartan_component_dim(&omega1, &omega2, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(dim, 8);
        // zero factor reduces to the other module
        let zero = GradedCtx::build(&w(3, &[0, 0]), &a, DEFAULT_DIM_CAP).unwrap();
        let dim = cartan_component_dim(&zero, &omega2, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(dim, 3);
    }

    #[test]
    fn descending_products_annihilate_tensors() {
        let a = strict3();
        let omega1 = GradedCtx::build(&w(3, &[1, 0]), &a, DEFAULT_DIM_CAP).unwrap();
        let omega2 = GradedCtx::build(&w(3, &[0, 1]), &a, DEFAULT_DIM_CAP).unwrap();
        let tensor = TensorCtx::new(vec![&omega1, &omega2]);
        // phi_{1,2} lowers out of the gate of phi_{2,3}
        let u = tensor.hw();
        let down = tensor.act(pair(1, 2), &u);
        assert!(!down.is_zero());
        let killed = tensor.act(pair(2, 3), &down);
        assert!(killed.is_zero());
    }

    #[test]
    fn exp_tensor_factorizes() {
        // exp(c) u^S agrees with the tensor of the factor orbits
        let a = strict3();
        let omega1 = GradedCtx::build(&w(3, &[1, 0]), &a, DEFAULT_DIM_CAP).unwrap();
        let omega2 = GradedCtx::build(&w(3, &[0, 1]), &a, DEFAULT_DIM_CAP).unwrap();
        let tensor = TensorCtx::new(vec![&omega1, &omega2]);
        let c: BTreeMap<(usize, usize), Rat> = [
            ((1, 2), crate::linalg::rat_frac(2, 3)),
            ((1, 3), rat(-1)),
            ((2, 3), crate::linalg::rat_frac(5, 7)),
        ]
        .into_iter()
        .collect();
        let joint = tensor.exp_hw(&c);
        let f1 = omega1.exp_hw(&c);
        let f2 = omega2.exp_hw(&c);
        let mut product: SparseVec<Vec<usize>> = SparseVec::zero();
        for (t1, c1) in f1.iter() {
            for (t2, c2) in f2.iter() {
                product.add_term(vec![*t1, *t2], c1 * c2);
            }
        }
        assert_eq!(joint, product);
    }

    #[test]
    fn graded_action_components_shift_by_degree() {
        let lam = w(3, &[1, 1]);
        let a = strict3();
        let ctx = GradedCtx::build(&lam, &a, DEFAULT_DIM_CAP).unwrap();
        let gv = ctx.grade(&ctx.hw());
        let moved = ctx.act_graded(pair(1, 2), &gv);
        for (m, comp) in moved.components.iter() {
            assert_eq!(*m, a.get(1, 2));
            for (ti, _) in comp.iter() {
                assert_eq!(ctx.levels[*ti], *m);
            }
        }
        assert_eq!(moved.flatten(), ctx.act(pair(1, 2), &ctx.hw()));
    }

    /// The flat three-factor action agrees with both iterated two-factor
    /// bracketings, and with the factor swap.
    #[test]
    fn tensor_bracketing_and_symmetry() {
        use rand::{Rng, SeedableRng};
        let a = strict3();
        let f1 = GradedCtx::build(&w(3, &[1, 0]), &a, DEFAULT_DIM_CAP).unwrap();
        let f2 = GradedCtx::build(&w(3, &[0, 1]), &a, DEFAULT_DIM_CAP).unwrap();
        let f3 = GradedCtx::build(&w(3, &[1, 0]), &a, DEFAULT_DIM_CAP).unwrap();
        let factors = [&f1, &f2, &f3];
        let flat = TensorCtx::new(factors.to_vec());
        let n = 3;
        let total = flat.total.clone();

        // iterated action with an explicit inner pair (left or right)
        let act_bracketed = |left: bool,
                             p: PairIndex,
                             v: &SparseVec<Vec<usize>>|
         -> SparseVec<Vec<usize>> {
            let mut out: SparseVec<Vec<usize>> = SparseVec::zero();
            let (inner_a, inner_b, outer) = if left { (0, 1, 2) } else { (1, 2, 0) };
            for (key, coeff) in v.iter() {
                let wt = flat.weight_of_key(key);
                if !in_cone_c(n, p.i, &total.sub(&wt)) {
                    continue;
                }
                // inner factor of the bracketing
                let inner_total = factors[inner_a]
                    .lambda()
                    .add(factors[inner_b].lambda());
                let inner_wt = factors[inner_a]
                    .rb
                    .column_weight(key[inner_a])
                    .add(factors[inner_b].rb.column_weight(key[inner_b]));
                if in_cone_c(n, p.i, &inner_total.sub(&inner_wt)) {
                    for (slot, factor) in [(inner_a, factors[inner_a]), (inner_b, factors[inner_b])] {
                        for (tj, c2) in factor.act_on_basis(p, key[slot]).iter() {
                            let mut k2 = key.clone();
                            k2[slot] = *tj;
                            out.add_term(k2, coeff * c2);
                        }
                    }
                }
                for (tj, c2) in factors[outer].act_on_basis(p, key[outer]).iter() {
                    let mut k2 = key.clone();
                    k2[outer] = *tj;
                    out.add_term(k2, coeff * c2);
                }
            }
            out
        };

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let pairs = all_pairs(n);
        for _ in 0..40 {
            let len = rng.gen_range(1..4);
            let letters: Vec<PairIndex> = (0..len)
                .map(|_| pairs[rng.gen_range(0..pairs.len())])
                .collect();
            let mut flat_v = flat.hw();
            let mut left_v = flat.hw();
            let mut right_v = flat.hw();
            for &p in letters.iter().rev() {
                flat_v = flat.act(p, &flat_v);
                left_v = act_bracketed(true, p, &left_v);
                right_v = act_bracketed(false, p, &right_v);
            }
            assert_eq!(flat_v, left_v, "letters {letters:?}");
            assert_eq!(flat_v, right_v, "letters {letters:?}");
        }

        // symmetry: swapping the two distinguished factors commutes with the
        // action under the key swap
        let swapped = TensorCtx::new(vec![&f2, &f1, &f3]);
        for _ in 0..25 {
            let len = rng.gen_range(1..4);
            let letters: Vec<PairIndex> = (0..len)
                .map(|_| pairs[rng.gen_range(0..pairs.len())])
                .collect();
            let mut v1 = flat.hw();
            let mut v2 = swapped.hw();
            for &p in letters.iter().rev() {
                v1 = flat.act(p, &v1);
                v2 = swapped.act(p, &v2);
            }
            let v2_swapped = v2.map_keys(|k| vec![k[1], k[0], k[2]]);
            assert_eq!(v1, v2_swapped, "letters {letters:?}");
        }
    }

    #[test]
    fn pairing_kernel_matches_initial_ideal() {
        let a = strict3();
        let lam = w(3, &[1, 1]);
        let fundamentals: BTreeMap<usize, GradedCtx> = [
            (
                1,
                GradedCtx::build(&w(3, &[1, 0]), &a, DEFAULT_DIM_CAP).unwrap(),
            ),
            (
                2,
                GradedCtx::build(&w(3, &[0, 1]), &a, DEFAULT_DIM_CAP).unwrap(),
            ),
        ]
        .into_iter()
        .collect();
        let kernel = pairing_kernel(&lam, &fundamentals, 10_000).unwrap();
        let initial =
            crate::ideals::initial_ideal_component(&lam, &a, crate::ideals::DEFAULT_MONOMIAL_CAP)
                .unwrap();
        assert!(crate::ideals::components_equal(&kernel, &initial));
    }

    #[test]
    fn fundamental_orbit_coordinates_match_polynomials() {
        // the wedge coordinates of the orbit point equal the evaluated
        // initial coordinate polynomials, up to the basis signs
        let a = strict3();
        let c: BTreeMap<(usize, usize), Rat> = [
            ((1, 2), rat(3)),
            ((1, 3), crate::linalg::rat_frac(-7, 2)),
            ((2, 3), rat(5)),
        ]
        .into_iter()
        .collect();
        for k in 1..3usize {
            let omega = Weight::fundamental(3, k);
            let ctx = GradedCtx::build(&omega, &a, DEFAULT_DIM_CAP).unwrap();
            let orbit = ctx.exp_hw(&c);
            let labels = fundamental_labels(&ctx);
            let images = crate::ideals::epsilon_s_images(3, &a);
            for (ti, (idx, sign)) in labels.iter().enumerate() {
                let expect = crate::ideals::eval_zpoly(&images[idx], &c) * rat(*sign);
                assert_eq!(orbit.get(&ti), expect, "k={k} idx={idx}");
            }
        }
    }

    #[test]
    fn strict_orbit_coordinates_are_monomials() {
        // with strict cone inequalities each orbit coordinate is a fixed
        // positive rational times the monomial c^T
        let a = strict3();
        let lam = w(3, &[1, 1]);
        let ctx = GradedCtx::build(&lam, &a, DEFAULT_DIM_CAP).unwrap();
        let eval_monomial = |t: &ThetaPoint, c: &BTreeMap<(usize, usize), Rat>| -> Rat {
            let mut out = rat(1);
            for (&(i, j), &e) in t.support() {
                for _ in 0..e {
                    out *= &c[&(i, j)];
                }
            }
            out
        };
        let c1: BTreeMap<(usize, usize), Rat> =
            [((1, 2), rat(2)), ((1, 3), rat(3)), ((2, 3), rat(5))]
                .into_iter()
                .collect();
        let c2: BTreeMap<(usize, usize), Rat> = [
            ((1, 2), crate::linalg::rat_frac(7, 3)),
            ((1, 3), rat(-2)),
            ((2, 3), crate::linalg::rat_frac(1, 4)),
        ]
        .into_iter()
        .collect();
        let o1 = ctx.exp_hw(&c1);
        let o2 = ctx.exp_hw(&c2);
        for (ti, t) in ctx.rb.pi.iter().enumerate() {
            let r1 = o1.get(&ti) / eval_monomial(t, &c1);
            let r2 = o2.get(&ti) / eval_monomial(t, &c2);
            assert_eq!(r1, r2, "coordinate at {t} is not monomial");
            assert!(r1 > Rat::zero(), "coefficient at {t} is not positive");
        }
    }

    #[test]
    fn pairing_kernel_matches_initial_ideal_n4() {
        let n = 4;
        let a = crate::cone::tight_at(n, crate::cone::facets(n)[1]);
        let lam = w(4, &[0, 1, 1]);
        let fundamentals: BTreeMap<usize, GradedCtx> = (1..n)
            .map(|k| {
                (
                    k,
                    GradedCtx::build(&Weight::fundamental(n, k), &a, DEFAULT_DIM_CAP).unwrap(),
                )
            })
            .collect();
        let kernel = pairing_kernel(&lam, &fundamentals, 10_000).unwrap();
        let initial =
            crate::ideals::initial_ideal_component(&lam, &a, crate::ideals::DEFAULT_MONOMIAL_CAP)
                .unwrap();
        assert_eq!(kernel.dim(), initial.dim());
        assert!(crate::ideals::components_equal(&kernel, &initial));
    }

    #[test]
    fn orbit_vanishes_on_initial_ideal() {
        let a = strict3();
        let lam = w(3, &[1, 1]);
        let initial =
            crate::ideals::initial_ideal_component(&lam, &a, crate::ideals::DEFAULT_MONOMIAL_CAP)
                .unwrap();
        let c: BTreeMap<(usize, usize), Rat> = [
            ((1, 2), rat(2)),
            ((1, 3), rat(7)),
            ((2, 3), crate::linalg::rat_frac(3, 5)),
        ]
        .into_iter()
        .collect();
        let images = crate::ideals::epsilon_s_images(3, &a);
        let values: Vec<Rat> = initial
            .monomials
            .iter()
            .map(|m| {
                m.factors()
                    .iter()
                    .map(|f| crate::ideals::eval_zpoly(&images[f], &c))
                    .product()
            })
            .collect();
        for v in &initial.basis {
            let mut total = Rat::zero();
            for (mi, coeff) in v.iter() {
                total += coeff * &values[*mi];
            }
            assert!(total.is_zero(), "orbit point must satisfy the ideal");
        }
    }
}
