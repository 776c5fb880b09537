//! Components of the Pluecker ideal and its degenerations, computed degree by
//! degree as kernels of explicit substitution maps into a polynomial ring:
//! the triangular determinant map, its weighted initial version, the
//! exponential coordinate map, and the monomial map of the toric ideal.

use crate::error::{Error, Result};
use crate::lie::{all_pairs, all_tuples, f_on_tuple, PlueckerIndex, Weight};
use crate::linalg::{rat, Echelon, Rat, SparseVec, TrackedEchelon};
use crate::rep::{GradingS, WeightingA};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Default cap on the number of monomials of R_lambda in kernel computations.
pub const DEFAULT_MONOMIAL_CAP: usize = 30_000;

/// Monomial in the variables z_{i,j}; diagonal variables z_{i,i} are allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZMon(BTreeMap<(usize, usize), u32>);

impl ZMon {
    pub fn one() -> Self {
        ZMon(BTreeMap::new())
    }

    pub fn var(i: usize, j: usize) -> Self {
        assert!(i <= j, "only upper triangular variables");
        ZMon(BTreeMap::from([((i, j), 1)]))
    }

    pub fn mul(&self, other: &ZMon) -> ZMon {
        let mut out = self.0.clone();
        for (&k, &e) in other.0.iter() {
            *out.entry(k).or_insert(0) += e;
        }
        ZMon(out)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&(usize, usize), &u32)> {
        self.0.iter()
    }

    /// grad^A with diagonal variables graded zero.
    pub fn grad_a(&self, a: &WeightingA) -> i64 {
        self.0
            .iter()
            .filter(|(&(i, j), _)| i < j)
            .map(|(&(i, j), &e)| a.get(i, j) * e as i64)
            .sum()
    }
}

impl std::fmt::Display for ZMon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(&(i, j), &e)| {
                if e == 1 {
                    format!("z[{i},{j}]")
                } else {
                    format!("z[{i},{j}]^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Polynomial in the z variables with exact rational coefficients.
pub type ZPoly = SparseVec<ZMon>;

pub fn zpoly_one() -> ZPoly {
    ZPoly::unit(ZMon::one())
}

pub fn zpoly_var(i: usize, j: usize) -> ZPoly {
    ZPoly::unit(ZMon::var(i, j))
}

pub fn zpoly_mul(p: &ZPoly, q: &ZPoly) -> ZPoly {
    let mut out = ZPoly::zero();
    for (m1, c1) in p.iter() {
        for (m2, c2) in q.iter() {
            out.add_term(m1.mul(m2), c1 * c2);
        }
    }
    out
}

/// Sum of the terms of minimal grad^A. Errors on the zero polynomial.
pub fn initial_part(p: &ZPoly, a: &WeightingA) -> Result<ZPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let min = p.keys().map(|m| m.grad_a(a)).min().unwrap();
    Ok(ZPoly::from_terms(
        p.iter()
            .filter(|(m, _)| m.grad_a(a) == min)
            .map(|(m, c)| (m.clone(), c.clone())),
    ))
}

/// Evaluates a z polynomial at z_{i,j} = c_{i,j} for i < j and z_{i,i} = 1.
pub fn eval_zpoly(p: &ZPoly, c: &BTreeMap<(usize, usize), Rat>) -> Rat {
    let mut total = Rat::zero();
    for (m, coeff) in p.iter() {
        let mut term = coeff.clone();
        for (&(i, j), &e) in m.exponents() {
            if i == j {
                continue;
            }
            let base = c.get(&(i, j)).cloned().unwrap_or_else(Rat::zero);
            for _ in 0..e {
                term *= &base;
            }
        }
        total += term;
    }
    total
}

/// Determinant of the submatrix of the upper triangular matrix
/// (z_{i,j})_{i<=j} spanned by the first k rows and the columns idx.
pub fn det_d(n: usize, idx: &PlueckerIndex) -> ZPoly {
    assert!(idx.values().iter().all(|&v| v <= n));
    det_minor(idx.values(), true)
}

/// The same minor in the full matrix of n^2 independent variables.
pub fn det_d_full(n: usize, idx: &PlueckerIndex) -> ZPoly {
    assert!(idx.values().iter().all(|&v| v <= n));
    det_minor(idx.values(), false)
}

fn det_minor(cols: &[usize], upper_triangular: bool) -> ZPoly {
    // Laplace expansion along the first row with sign tracking.
    fn rec(row: usize, cols: &[usize], upper: bool) -> ZPoly {
        if cols.is_empty() {
            return zpoly_one();
        }
        let mut out = ZPoly::zero();
        for (pos, &c) in cols.iter().enumerate() {
            if upper && c < row {
                continue;
            }
            let entry = if upper {
                ZMon::var(row, c)
            } else {
                ZMon(BTreeMap::from([((row, c), 1)]))
            };
            let rest: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != pos)
                .map(|(_, &v)| v)
                .collect();
            let sub = rec(row + 1, &rest, upper);
            let sign = if pos % 2 == 0 { rat(1) } else { rat(-1) };
            for (m, coeff) in sub.iter() {
                out.add_term(entry.mul(m), coeff * &sign);
            }
        }
        out
    }
    rec(1, cols, upper_triangular)
}

/// Coordinate of the ordered product of exponentials exp(z_{i,j} f_{i,j})
/// applied to the highest wedge vector, at the wedge basis vector idx,
/// multiplied by the homogenizing variable z_{k,k}.
pub fn exp_coord_poly(n: usize, idx: &PlueckerIndex) -> ZPoly {
    let k = idx.len();
    assert!(k < n);
    let start = PlueckerIndex::new((1..=k).collect());
    let mut vec: BTreeMap<PlueckerIndex, ZPoly> = BTreeMap::from([(start, zpoly_one())]);
    // rightmost factors (largest first index) act first; exponentials of the
    // square-zero wedge action truncate after the linear term
    let mut pairs = all_pairs(n);
    pairs.reverse();
    for p in pairs {
        let z = zpoly_var(p.i, p.j);
        let mut additions: Vec<(PlueckerIndex, ZPoly)> = Vec::new();
        for (tuple, poly) in vec.iter() {
            if let Some((img, sign)) = f_on_tuple(p, tuple) {
                let mut contrib = zpoly_mul(poly, &z);
                contrib.scale(&rat(sign));
                additions.push((img, contrib));
            }
        }
        for (img, contrib) in additions {
            let entry = vec.entry(img).or_insert_with(ZPoly::zero);
            let sum = entry.add(&contrib);
            *entry = sum;
        }
    }
    let coord = vec.get(idx).cloned().unwrap_or_else(ZPoly::zero);
    zpoly_mul(&zpoly_var(k, k), &coord)
}

/// Image of X_{i_1,...,i_k} under the toric monomial map, prod_l z_{l, i_l}.
pub fn toric_image(idx: &PlueckerIndex) -> ZPoly {
    let mut m = ZMon::one();
    for (pos, &v) in idx.values().iter().enumerate() {
        m = m.mul(&ZMon::var(pos + 1, v));
    }
    ZPoly::unit(m)
}

/// Variable images for the triangular determinant map.
pub fn delta_images(n: usize) -> BTreeMap<PlueckerIndex, ZPoly> {
    images_by(n, |idx| det_d(n, idx))
}

/// Variable images for the weighted initial determinant map.
pub fn delta_s_images(n: usize, a: &WeightingA) -> BTreeMap<PlueckerIndex, ZPoly> {
    initial_images(&delta_images(n), a)
}

/// Takes the weighted initial part of every image.
pub fn initial_images(
    base: &BTreeMap<PlueckerIndex, ZPoly>,
    a: &WeightingA,
) -> BTreeMap<PlueckerIndex, ZPoly> {
    base.iter()
        .map(|(idx, p)| {
            (
                idx.clone(),
                initial_part(p, a).expect("variable images are nonzero"),
            )
        })
        .collect()
}

/// Variable images for the exponential coordinate map.
pub fn epsilon_images(n: usize) -> BTreeMap<PlueckerIndex, ZPoly> {
    images_by(n, |idx| exp_coord_poly(n, idx))
}

/// Variable images for the weighted initial exponential map.
pub fn epsilon_s_images(n: usize, a: &WeightingA) -> BTreeMap<PlueckerIndex, ZPoly> {
    initial_images(&epsilon_images(n), a)
}

/// Variable images for the toric monomial map.
pub fn toric_images(n: usize) -> BTreeMap<PlueckerIndex, ZPoly> {
    images_by(n, toric_image)
}

fn images_by(
    n: usize,
    f: impl Fn(&PlueckerIndex) -> ZPoly,
) -> BTreeMap<PlueckerIndex, ZPoly> {
    let mut out = BTreeMap::new();
    for k in 1..n {
        for idx in all_tuples(n, k) {
            let img = f(&idx);
            out.insert(idx, img);
        }
    }
    out
}

/// Monomial of the Pluecker ring: a multiset of index tuples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PlueckerMonomial(Vec<PlueckerIndex>);

impl PlueckerMonomial {
    pub fn new(mut factors: Vec<PlueckerIndex>) -> Self {
        factors.sort();
        PlueckerMonomial(factors)
    }

    pub fn factors(&self) -> &[PlueckerIndex] {
        &self.0
    }

    /// wt grading: the count of factors of each length, as a weight.
    pub fn wt(&self, n: usize) -> Weight {
        let mut coords = vec![0i64; n - 1];
        for f in &self.0 {
            coords[f.len() - 1] += 1;
        }
        Weight::new(n, coords)
    }

    pub fn grad_s(&self, s: &GradingS) -> i64 {
        self.0.iter().map(|f| s.get(f)).sum()
    }
}

impl std::fmt::Display for PlueckerMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| format!("X{t}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Monomial basis of the wt-homogeneous component R_lambda, canonical order.
pub fn r_lambda_monomials(n: usize, lambda: &Weight) -> Vec<PlueckerMonomial> {
    fn multisets(tuples: &[PlueckerIndex], size: usize) -> Vec<Vec<PlueckerIndex>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            tuples: &[PlueckerIndex],
            size: usize,
            start: usize,
            cur: &mut Vec<PlueckerIndex>,
            out: &mut Vec<Vec<PlueckerIndex>>,
        ) {
            if cur.len() == size {
                out.push(cur.clone());
                return;
            }
            for t in start..tuples.len() {
                cur.push(tuples[t].clone());
                rec(tuples, size, t, cur, out);
                cur.pop();
            }
        }
        rec(tuples, size, 0, &mut cur, &mut out);
        out
    }
    let mut blocks: Vec<Vec<Vec<PlueckerIndex>>> = Vec::new();
    for k in 1..n {
        let a_k = lambda.coord(k);
        if a_k > 0 {
            blocks.push(multisets(&all_tuples(n, k), a_k as usize));
        }
    }
    let mut out = vec![Vec::new()];
    for block in blocks {
        let mut next = Vec::with_capacity(out.len() * block.len());
        for prefix in &out {
            for choice in &block {
                let mut factors = prefix.clone();
                factors.extend(choice.iter().cloned());
                next.push(factors);
            }
        }
        out = next;
    }
    out.into_iter().map(PlueckerMonomial::new).collect()
}

/// A graded component of an ideal of the Pluecker ring, as a list of basis
/// vectors over the monomial basis of R_lambda.
#[derive(Clone, Debug)]
pub struct IdealComponent {
    pub lambda: Weight,
    pub monomials: Vec<PlueckerMonomial>,
    pub basis: Vec<SparseVec<usize>>,
    index: BTreeMap<PlueckerMonomial, usize>,
}

impl IdealComponent {
    pub fn new(
        lambda: Weight,
        monomials: Vec<PlueckerMonomial>,
        basis: Vec<SparseVec<usize>>,
    ) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        IdealComponent {
            lambda,
            monomials,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn monomial_index(&self, m: &PlueckerMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Vector of a binomial X_u X_v - X_p X_q in this component's coordinates.
    pub fn binomial_vector(
        &self,
        plus: (&PlueckerIndex, &PlueckerIndex),
        minus: (&PlueckerIndex, &PlueckerIndex),
    ) -> Option<SparseVec<usize>> {
        let mp = PlueckerMonomial::new(vec![plus.0.clone(), plus.1.clone()]);
        let mm = PlueckerMonomial::new(vec![minus.0.clone(), minus.1.clone()]);
        let ip = self.monomial_index(&mp)?;
        let im = self.monomial_index(&mm)?;
        let mut v = SparseVec::zero();
        v.add_term(ip, rat(1));
        v.add_term(im, rat(-1));
        Some(v)
    }

    pub fn contains(&self, v: &SparseVec<usize>) -> bool {
        crate::linalg::in_span(v, &self.basis)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let basis: Vec<serde_json::Value> = self
            .basis
            .iter()
            .map(|v| {
                let terms: Vec<serde_json::Value> = v
                    .iter()
                    .map(|(mi, c)| {
                        let tuples: Vec<Vec<usize>> = self.monomials[*mi]
                            .factors()
                            .iter()
                            .map(|t| t.values().to_vec())
                            .collect();
                        serde_json::json!({ "monomial": tuples, "coeff": c.to_string() })
                    })
                    .collect();
                serde_json::Value::Array(terms)
            })
            .collect();
        serde_json::json!({
            "lambda": self.lambda.coords(),
            "basis": basis,
        })
    }
}

/// Two components are equal when they live in the same degree and their bases
/// span the same subspace.
pub fn components_equal(a: &IdealComponent, b: &IdealComponent) -> bool {
    if a.lambda != b.lambda || a.monomials != b.monomials || a.dim() != b.dim() {
        return false;
    }
    let mut ech = Echelon::new();
    for v in &a.basis {
        ech.insert(v.clone());
    }
    b.basis.iter().all(|v| ech.contains(v))
}

fn monomial_image(
    m: &PlueckerMonomial,
    images: &BTreeMap<PlueckerIndex, ZPoly>,
) -> ZPoly {
    let mut out = zpoly_one();
    for f in m.factors() {
        out = zpoly_mul(&out, images.get(f).expect("image defined for every tuple"));
    }
    out
}

fn guard_monomials(n: usize, lambda: &Weight, cap: usize) -> Result<Vec<PlueckerMonomial>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(format!("{:?}", lambda.coords())));
    }
    let mut count: usize = 1;
    for k in 1..n {
        let a_k = lambda.coord(k) as usize;
        if a_k > 0 {
            let vars = all_tuples(n, k).len();
            // multiset coefficient C(vars + a_k - 1, a_k)
            let mut block: usize = 1;
            for t in 0..a_k {
                block = block.saturating_mul(vars + t) / (t + 1);
            }
            count = count.saturating_mul(block);
        }
        if count > cap {
            return Err(Error::DimGuard {
                what: "dim R_lambda",
                value: count,
                cap,
            });
        }
    }
    Ok(r_lambda_monomials(n, lambda))
}

/// Kernel of the linear map sending each monomial of R_lambda to the product
/// of its variable images.
pub fn kernel_component(
    lambda: &Weight,
    images: &BTreeMap<PlueckerIndex, ZPoly>,
    cap: usize,
) -> Result<IdealComponent> {
    let n = lambda.n();
    let monomials = guard_monomials(n, lambda, cap)?;
    let mut ech: TrackedEchelon<ZMon> = TrackedEchelon::new();
    let mut basis = Vec::new();
    for (mi, m) in monomials.iter().enumerate() {
        let img = monomial_image(m, images);
        if let Some(rel) = ech.insert(mi, img) {
            basis.push(rel);
        }
    }
    Ok(IdealComponent::new(lambda.clone(), monomials, basis))
}

/// Rank of the same map, without kernel tracking.
pub fn image_rank(
    lambda: &Weight,
    images: &BTreeMap<PlueckerIndex, ZPoly>,
    cap: usize,
) -> Result<usize> {
    let n = lambda.n();
    let monomials = guard_monomials(n, lambda, cap)?;
    let mut ech: Echelon<ZMon> = Echelon::new();
    for m in &monomials {
        ech.insert(monomial_image(m, images));
    }
    Ok(ech.rank())
}

/// Exact kernel equality of two substitution maps on R_lambda, decided by
/// comparing both ranks with the rank of the stacked map.
pub fn kernels_equal(
    lambda: &Weight,
    images1: &BTreeMap<PlueckerIndex, ZPoly>,
    images2: &BTreeMap<PlueckerIndex, ZPoly>,
    cap: usize,
) -> Result<bool> {
    let n = lambda.n();
    let monomials = guard_monomials(n, lambda, cap)?;
    let mut e1: Echelon<ZMon> = Echelon::new();
    let mut e2: Echelon<ZMon> = Echelon::new();
    let mut stacked: Echelon<(u8, ZMon)> = Echelon::new();
    for m in &monomials {
        let i1 = monomial_image(m, images1);
        let i2 = monomial_image(m, images2);
        let mut s: SparseVec<(u8, ZMon)> = SparseVec::zero();
        for (zm, c) in i1.iter() {
            s.add_term((0, zm.clone()), c.clone());
        }
        for (zm, c) in i2.iter() {
            s.add_term((1, zm.clone()), c.clone());
        }
        e1.insert(i1);
        e2.insert(i2);
        stacked.insert(s);
    }
    Ok(e1.rank() == e2.rank() && e1.rank() == stacked.rank())
}

/// One pass over R_lambda evaluating two substitution maps at once: both
/// ranks, the rank of the stacked map, and the per-grade counts and ranks of
/// the first map.
pub struct PairedScan {
    pub monomial_count: usize,
    pub rank1: usize,
    pub rank2: usize,
    pub rank_stacked: usize,
    /// grade -> (number of monomials, rank of the first map in that grade)
    pub grades: BTreeMap<i64, (usize, usize)>,
}

impl PairedScan {
    pub fn kernels_agree(&self) -> bool {
        self.rank1 == self.rank2 && self.rank1 == self.rank_stacked
    }

    pub fn kernel_dim(&self) -> usize {
        self.monomial_count - self.rank1
    }
}

pub fn paired_kernel_scan(
    lambda: &Weight,
    images1: &BTreeMap<PlueckerIndex, ZPoly>,
    images2: &BTreeMap<PlueckerIndex, ZPoly>,
    s: &GradingS,
    cap: usize,
) -> Result<PairedScan> {
    let n = lambda.n();
    let monomials = guard_monomials(n, lambda, cap)?;
    let mut e1: Echelon<ZMon> = Echelon::new();
    let mut e2: Echelon<ZMon> = Echelon::new();
    let mut stacked: Echelon<(u8, ZMon)> = Echelon::new();
    let mut grades: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    for m in &monomials {
        let grade = m.grad_s(s);
        let i1 = monomial_image(m, images1);
        let i2 = monomial_image(m, images2);
        let mut sv: SparseVec<(u8, ZMon)> = SparseVec::zero();
        for (zm, c) in i1.iter() {
            sv.add_term((0, zm.clone()), c.clone());
        }
        for (zm, c) in i2.iter() {
            sv.add_term((1, zm.clone()), c.clone());
        }
        let entry = grades.entry(grade).or_insert((0, 0));
        entry.0 += 1;
        if e1.insert(i1) {
            entry.1 += 1;
        }
        e2.insert(i2);
        stacked.insert(sv);
    }
    Ok(PairedScan {
        monomial_count: monomials.len(),
        rank1: e1.rank(),
        rank2: e2.rank(),
        rank_stacked: stacked.rank(),
        grades,
    })
}

/// Per-degree dimensions (monomial count, kernel dimension) of a substitution
/// map, graded by grad^S for S = sigma(A).
pub fn component_graded_dims(
    lambda: &Weight,
    a: &WeightingA,
    images: &BTreeMap<PlueckerIndex, ZPoly>,
    cap: usize,
) -> Result<BTreeMap<i64, (usize, usize)>> {
    let n = lambda.n();
    let s = crate::cone::sigma(a);
    let monomials = guard_monomials(n, lambda, cap)?;
    let mut groups: BTreeMap<i64, Vec<&PlueckerMonomial>> = BTreeMap::new();
    for m in &monomials {
        groups.entry(m.grad_s(&s)).or_default().push(m);
    }
    let mut out = BTreeMap::new();
    for (grade, ms) in groups {
        let mut ech: Echelon<ZMon> = Echelon::new();
        for m in &ms {
            ech.insert(monomial_image(m, images));
        }
        out.insert(grade, (ms.len(), ms.len() - ech.rank()));
    }
    Ok(out)
}

pub fn ideal_component(lambda: &Weight, cap: usize) -> Result<IdealComponent> {
    kernel_component(lambda, &delta_images(lambda.n()), cap)
}

pub fn initial_ideal_component(
    lambda: &Weight,
    a: &WeightingA,
    cap: usize,
) -> Result<IdealComponent> {
    kernel_component(lambda, &delta_s_images(lambda.n(), a), cap)
}

pub fn toric_component(lambda: &Weight, cap: usize) -> Result<IdealComponent> {
    kernel_component(lambda, &toric_images(lambda.n()), cap)
}

pub fn exp_component(lambda: &Weight, cap: usize) -> Result<IdealComponent> {
    kernel_component(lambda, &epsilon_images(lambda.n()), cap)
}

pub fn initial_exp_component(
    lambda: &Weight,
    a: &WeightingA,
    cap: usize,
) -> Result<IdealComponent> {
    kernel_component(lambda, &epsilon_s_images(lambda.n(), a), cap)
}

/// Restriction to the partial flag subring on the lengths in `d`. For lambda
/// supported on d the component coincides with the unrestricted one; the
/// computation reruns the kernel over the allowed variables only.
pub fn restrict_partial(
    component: &IdealComponent,
    d: &std::collections::BTreeSet<usize>,
    images: &BTreeMap<PlueckerIndex, ZPoly>,
    cap: usize,
) -> Result<IdealComponent> {
    let lambda = &component.lambda;
    for k in 1..lambda.n() {
        if lambda.coord(k) > 0 && !d.contains(&k) {
            return Err(Error::SupportOutsideSubset);
        }
    }
    let restricted: BTreeMap<PlueckerIndex, ZPoly> = images
        .iter()
        .filter(|(idx, _)| d.contains(&idx.len()))
        .map(|(idx, p)| (idx.clone(), p.clone()))
        .collect();
    kernel_component(lambda, &restricted, cap)
}

/// Initial space of a component under an arbitrary monomial grading: the
/// direct sum over m of the projections to grade m of the intersections with
/// the span of monomials of grade at least m.
pub fn initial_space(
    component: &IdealComponent,
    grad: impl Fn(&PlueckerMonomial) -> i64,
) -> Vec<SparseVec<usize>> {
    let grades: Vec<i64> = component.monomials.iter().map(&grad).collect();
    let mut distinct: Vec<i64> = grades.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut out = Vec::new();
    for &m in &distinct {
        // kernel of the projection onto monomials of grade below m gives the
        // intersection with the span of grades >= m
        let mut proj = crate::linalg::SparseMatrix::new(component.monomials.len(), component.dim());
        for (ci, v) in component.basis.iter().enumerate() {
            for (mi, c) in v.iter() {
                if grades[*mi] < m {
                    proj.set(*mi, ci, c.clone());
                }
            }
        }
        for combo in proj.kernel_basis() {
            let mut vec: SparseVec<usize> = SparseVec::zero();
            for (ci, c) in combo.iter() {
                vec.add_scaled(&component.basis[*ci], c);
            }
            // keep only the grade-m part
            let part = SparseVec::from_terms(
                vec.iter()
                    .filter(|(mi, _)| grades[**mi] == m)
                    .map(|(mi, c)| (*mi, c.clone())),
            );
            if !part.is_zero() {
                out.push(part);
            }
        }
    }
    // prune to an independent set, keeping the construction order
    let mut ech = Echelon::new();
    out.retain(|v| ech.insert(v.clone()));
    out
}

/// Applies a variable substitution idx -> subst(idx) to a component,
/// producing a component in the image degree.
pub fn map_component_monomials(
    component: &IdealComponent,
    target_lambda: Weight,
    subst: impl Fn(&PlueckerIndex) -> PlueckerIndex,
) -> IdealComponent {
    let n = target_lambda.n();
    let monomials = r_lambda_monomials(n, &target_lambda);
    let index: BTreeMap<PlueckerMonomial, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let basis = component
        .basis
        .iter()
        .map(|v| {
            v.map_keys(|mi| {
                let mapped = PlueckerMonomial::new(
                    component.monomials[*mi]
                        .factors()
                        .iter()
                        .map(&subst)
                        .collect(),
                );
                *index
                    .get(&mapped)
                    .expect("substituted monomial has the target degree")
            })
        })
        .collect();
    IdealComponent::new(target_lambda, monomials, basis)
}
