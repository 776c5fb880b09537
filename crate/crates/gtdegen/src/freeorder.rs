//! The total order on free lowering words, normal forms in the monomial
//! quotient, essential signatures via a rank oracle, tensor products gated by
//! exponent-table gradings, and the toric pairing kernel.
//!
//! Initial parts with respect to the word order are the maximal monomials,
//! the opposite convention to the minimal-component initial ideals of the
//! integer gradings elsewhere in this crate.

use crate::error::{Error, Result};
use crate::ideals::{r_lambda_monomials, IdealComponent};
use crate::lie::{all_pairs, simple_root_coords, PairIndex, Weight};
use crate::linalg::{rat, Echelon, Rat, SparseVec, TrackedEchelon};
use crate::polytope::{t_of_tuple, ThetaPoint};
use crate::rep::TensorSpace;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// A word in the free monoid of lowering letters.
pub type FreeWord = Vec<PairIndex>;

/// Letter weight j - i summed over the word.
pub fn word_weight(w: &[PairIndex]) -> i64 {
    w.iter().map(|p| (p.j - p.i) as i64).sum()
}

/// The same with letter weight g(j) - g(i) for a strictly increasing g;
/// `g[v]` is indexed by 1..=n.
pub fn word_weight_g(w: &[PairIndex], g: &[i64]) -> i64 {
    w.iter().map(|p| g[p.j] - g[p.i]).sum()
}

/// Strict order: shorter total weight first, ties broken at the first
/// differing letter by first index, then second index.
pub fn word_less_g(x: &[PairIndex], y: &[PairIndex], g: &[i64]) -> bool {
    let wx = word_weight_g(x, g);
    let wy = word_weight_g(y, g);
    if wx != wy {
        return wx < wy;
    }
    for (a, b) in x.iter().zip(y.iter()) {
        if a != b {
            return a.i < b.i || (a.i == b.i && a.j < b.j);
        }
    }
    // equal weights and no difference: prefixes of equal weight are equal
    assert_eq!(x.len(), y.len(), "equal-weight words cannot be proper prefixes");
    false
}

pub fn word_less(x: &[PairIndex], y: &[PairIndex]) -> bool {
    let n = x
        .iter()
        .chain(y.iter())
        .map(|p| p.j)
        .max()
        .unwrap_or(2);
    let g: Vec<i64> = (0..=n as i64).collect();
    word_less_g(x, y, &g)
}

/// The normal word of an exponent table: letters sorted lexicographically.
pub fn canonical_word(t: &ThetaPoint) -> FreeWord {
    let mut out = Vec::new();
    for (&(i, j), &e) in t.support() {
        for _ in 0..e {
            out.push(PairIndex::new(i, j));
        }
    }
    out
}

/// Normal form in the monomial quotient: a product is nonzero iff the first
/// indices increase weakly and second indices increase weakly inside equal
/// first-index runs; the nonzero products are exactly the canonical words.
pub fn u_prec_normal(n: usize, word: &[PairIndex]) -> Option<ThetaPoint> {
    for w in word.windows(2) {
        if w[0].i > w[1].i || (w[0].i == w[1].i && w[0].j > w[1].j) {
            return None;
        }
    }
    let mut t = ThetaPoint::zero(n);
    for p in word {
        let cur = t.get(p.i, p.j);
        t.set(p.i, p.j, cur + 1);
    }
    Some(t)
}

/// Tensor gate of the exponent-graded category: a letter annihilates any
/// vector whose grading support contains a lexicographically smaller letter.
pub fn d_tensor_gate(p: PairIndex, grad: &ThetaPoint) -> bool {
    match grad.support().next() {
        None => true,
        Some((&(l, m), _)) => !(l < p.i || (l == p.i && m < p.j)),
    }
}

fn root_coords_u64(w: &Weight) -> Option<Vec<u64>> {
    let coords = simple_root_coords(w);
    let mut out = Vec::with_capacity(coords.len());
    for c in coords {
        if !c.is_integer() || c.is_negative() {
            return None;
        }
        out.push(c.to_integer().to_u64()?);
    }
    Some(out)
}

/// All exponent tables with nonzero monomial action, grouped by the weight
/// they land in. Enumerates by consuming simple-root capacities letter by
/// letter, so the search is complete; zero vectors prune whole subtrees.
fn action_leaves(
    space: &TensorSpace,
    caps: &[u64],
) -> BTreeMap<Weight, Vec<(ThetaPoint, SparseVec<usize>)>> {
    let n = space.n();
    let mut pairs = all_pairs(n);
    pairs.reverse();
    let mut out: BTreeMap<Weight, Vec<(ThetaPoint, SparseVec<usize>)>> = BTreeMap::new();
    let mut t = ThetaPoint::zero(n);
    let mut caps = caps.to_vec();
    fn rec(
        space: &TensorSpace,
        pairs: &[PairIndex],
        caps: &mut Vec<u64>,
        t: &mut ThetaPoint,
        v: SparseVec<usize>,
        out: &mut BTreeMap<Weight, Vec<(ThetaPoint, SparseVec<usize>)>>,
    ) {
        if v.is_zero() {
            return;
        }
        let Some((&p, rest)) = pairs.split_first() else {
            let w = space.weight_of_vec(&v).expect("leaf vectors are weight homogeneous");
            out.entry(w).or_default().push((t.clone(), v));
            return;
        };
        // exponent 0 branch
        rec(space, rest, caps, t, v.clone(), out);
        let max_e = (p.i..p.j).map(|l| caps[l - 1]).min().unwrap_or(0);
        if max_e == 0 {
            return;
        }
        let mut cur = v;
        for e in 1..=max_e {
            cur = space.apply_f(p, &cur);
            if cur.is_zero() {
                break;
            }
            for l in p.i..p.j {
                caps[l - 1] -= 1;
            }
            t.set(p.i, p.j, e as i64);
            rec(space, rest, caps, t, cur.clone(), out);
        }
        // restore consumed capacity
        let used = t.get(p.i, p.j) as u64;
        for l in p.i..p.j {
            caps[l - 1] += used;
        }
        t.set(p.i, p.j, 0);
    }
    rec(space, &pairs, &mut caps, &mut t, space.hw_vector(), &mut out);
    out
}

/// Essential signatures of one weight space: walk the monomial images in
/// increasing word order and keep every exponent table that raises the rank.
fn essential_of_group(group: &[(ThetaPoint, SparseVec<usize>)], g: &[i64]) -> Vec<ThetaPoint> {
    let mut order: Vec<usize> = (0..group.len()).collect();
    order.sort_by(|&x, &y| {
        let (t1, t2) = (&group[x].0, &group[y].0);
        let w1 = canonical_word(t1);
        let w2 = canonical_word(t2);
        if word_less_g(&w1, &w2, g) {
            std::cmp::Ordering::Less
        } else if word_less_g(&w2, &w1, g) {
            std::cmp::Ordering::Greater
        } else {
            assert_eq!(t1, t2, "canonical words determine exponent tables");
            std::cmp::Ordering::Equal
        }
    });
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for idx in order {
        let (t, v) = &group[idx];
        if ech.insert(v.clone()) {
            out.push(t.clone());
        }
    }
    out
}

/// Essential signatures in the weight space mu of L_lambda, for the order
/// weighted by g (pass the identity for the plain order).
pub fn essential_signatures(
    lambda: &Weight,
    mu: &Weight,
    g: &[i64],
    dim_cap: usize,
) -> Result<Vec<ThetaPoint>> {
    let dim = lambda.weyl_dim()? as usize;
    if dim > dim_cap {
        return Err(Error::DimGuard {
            what: "dim L_lambda",
            value: dim,
            cap: dim_cap,
        });
    }
    let Some(caps) = root_coords_u64(&lambda.sub(mu)) else {
        return Ok(Vec::new());
    };
    let space = TensorSpace::build(lambda)?;
    let mut leaves = action_leaves(&space, &caps);
    // keep only the exact weight space; other leaves used partial capacity
    match leaves.get_mut(mu) {
        Some(group) => {
            group.retain(|(t, _)| {
                let coords = simple_root_coords(&lambda.sub(mu));
                let mut consumed = vec![0i64; lambda.n() - 1];
                for (&(i, j), &e) in t.support() {
                    for l in i..j {
                        consumed[l - 1] += e;
                    }
                }
                coords
                    .iter()
                    .zip(&consumed)
                    .all(|(c, used)| c.to_integer().to_i64() == Some(*used))
            });
            Ok(essential_of_group(group, g))
        }
        None => Ok(Vec::new()),
    }
}

/// Essential signatures over all weight spaces.
pub fn essential_all(
    lambda: &Weight,
    g: &[i64],
    dim_cap: usize,
) -> Result<std::collections::BTreeSet<ThetaPoint>> {
    Ok(essential_all_multi(lambda, std::slice::from_ref(&g.to_vec()), dim_cap)?
        .pop()
        .unwrap())
}

/// Essential signature sets for several letter weightings at once; the
/// monomial action is evaluated once and only the orderings vary.
pub fn essential_all_multi(
    lambda: &Weight,
    gs: &[Vec<i64>],
    dim_cap: usize,
) -> Result<Vec<std::collections::BTreeSet<ThetaPoint>>> {
    let dim = lambda.weyl_dim()? as usize;
    if dim > dim_cap {
        return Err(Error::DimGuard {
            what: "dim L_lambda",
            value: dim,
            cap: dim_cap,
        });
    }
    let lowest_gap = lambda.add(&lambda.reversed());
    let caps = root_coords_u64(&lowest_gap).expect("dominant gap has integral root coordinates");
    let space = TensorSpace::build(lambda)?;
    let leaves = action_leaves(&space, &caps);
    let mut out = Vec::with_capacity(gs.len());
    for g in gs {
        let mut set = std::collections::BTreeSet::new();
        for group in leaves.values() {
            for t in essential_of_group(group, g) {
                set.insert(t);
            }
        }
        out.push(set);
    }
    Ok(out)
}

/// The identity letter weighting for a given n.
pub fn identity_g(n: usize) -> Vec<i64> {
    (0..=n as i64).collect()
}

/// Expansion of chi^T on a tensor of two highest weight classes, with every
/// gate simulated explicitly. Returns the coefficients by decomposition.
pub fn gated_tensor_expansion(
    t: &ThetaPoint,
    pi_lambda: &std::collections::BTreeSet<ThetaPoint>,
    pi_mu: &std::collections::BTreeSet<ThetaPoint>,
) -> BTreeMap<(ThetaPoint, ThetaPoint), Rat> {
    let n = t.n();
    let zero = ThetaPoint::zero(n);
    let mut states: BTreeMap<(ThetaPoint, ThetaPoint), Rat> =
        BTreeMap::from([((zero.clone(), zero), rat(1))]);
    // letters act rightmost first, i.e. in decreasing lexicographic order
    let letters: Vec<PairIndex> = {
        let mut w = canonical_word(t);
        w.reverse();
        w
    };
    let in_pi = |t1: &ThetaPoint, first: bool| -> bool {
        if first {
            pi_lambda.contains(t1)
        } else {
            pi_mu.contains(t1)
        }
    };
    for p in letters {
        let mut next: BTreeMap<(ThetaPoint, ThetaPoint), Rat> = BTreeMap::new();
        for ((t1, t2), coeff) in states {
            let total = t1.add(&t2);
            if !d_tensor_gate(p, &total) {
                continue;
            }
            for first in [true, false] {
                let target = if first { &t1 } else { &t2 };
                // left multiplication by the letter must stay normal ordered
                let ok_order = match target.support().next() {
                    None => true,
                    Some((&(l, m), _)) => p.i < l || (p.i == l && p.j <= m),
                };
                if !ok_order {
                    continue;
                }
                let mut bumped = target.clone();
                bumped.set(p.i, p.j, bumped.get(p.i, p.j) + 1);
                if !in_pi(&bumped, first) {
                    continue;
                }
                let key = if first {
                    (bumped, t2.clone())
                } else {
                    (t1.clone(), bumped)
                };
                let entry = next.entry(key).or_insert_with(Rat::zero);
                *entry += &coeff;
            }
        }
        states = next;
    }
    states
}

/// Cartan component property of the gated tensor product: chi^T acts
/// nontrivially on the product of highest weight classes exactly when T
/// decomposes over the two polytopes, which must match membership in the sum
/// polytope. A seeded sample of tables is re-checked against the explicit
/// gated expansion.
pub fn prec_cartan_check(lambda: &Weight, mu: &Weight, budget: usize) -> Result<bool> {
    let n = lambda.n();
    let pi_l = crate::polytope::pi_lambda(lambda, budget)?;
    let pi_m = crate::polytope::pi_lambda(mu, budget)?;
    let pi_sum = crate::polytope::pi_lambda(&lambda.add(mu), budget)?;
    let sum = crate::polytope::minkowski_sum(&pi_l, &pi_m, budget)?;
    if sum != pi_sum {
        return Ok(false);
    }
    // spot-check cancellation-freeness of the gated expansion
    let set_l: std::collections::BTreeSet<ThetaPoint> = pi_l.iter().cloned().collect();
    let set_m: std::collections::BTreeSet<ThetaPoint> = pi_m.iter().cloned().collect();
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6e5f);
    let sum_points: Vec<&ThetaPoint> = pi_sum.iter().collect();
    for _ in 0..8.min(sum_points.len()) {
        let t = sum_points[rng.gen_range(0..sum_points.len())];
        let expansion = gated_tensor_expansion(t, &set_l, &set_m);
        for ((t1, t2), coeff) in &expansion {
            assert_eq!(&t1.add(t2), t);
            assert!(coeff > &Rat::zero(), "expansion coefficients are positive");
        }
        let nonzero = !expansion.is_empty();
        if !nonzero {
            return Ok(false);
        }
    }
    // tables slightly outside the sum must act as zero
    for _ in 0..8 {
        let mut t = sum_points[rng.gen_range(0..sum_points.len())].clone();
        let pairs = all_pairs(n);
        let p = pairs[rng.gen_range(0..pairs.len())];
        t.set(p.i, p.j, t.get(p.i, p.j) + 7);
        if sum.contains(&t) {
            continue;
        }
        let expansion = gated_tensor_expansion(&t, &set_l, &set_m);
        if !expansion.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kernel of the pairing between R_lambda monomials and the monomial action
/// on the symmetrized highest weight class: each monomial pairs against the
/// single exponent table its factors sum to.
pub fn prec_toric_kernel(lambda: &Weight, cap: usize) -> Result<IdealComponent> {
    let n = lambda.n();
    let monomials = r_lambda_monomials(n, lambda);
    if monomials.len() > cap {
        return Err(Error::DimGuard {
            what: "dim R_lambda",
            value: monomials.len(),
            cap,
        });
    }
    let mut ech: TrackedEchelon<ThetaPoint> = TrackedEchelon::new();
    let mut basis = Vec::new();
    for (mi, m) in monomials.iter().enumerate() {
        let mut total = ThetaPoint::zero(n);
        for f in m.factors() {
            total = total.add(&t_of_tuple(n, f));
        }
        if let Some(rel) = ech.insert(mi, SparseVec::unit(total)) {
            basis.push(rel);
        }
    }
    Ok(IdealComponent::new(lambda.clone(), monomials.clone(), basis))
}

/// Convenience wrapper: the kernel restricted check used in reports.
pub fn prec_toric_matches(lambda: &Weight, cap: usize) -> Result<bool> {
    let pairing = prec_toric_kernel(lambda, cap)?;
    let toric = crate::ideals::toric_component(lambda, cap)?;
    Ok(crate::ideals::components_equal(&pairing, &toric))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{pi_lambda, DEFAULT_POINT_BUDGET};
    use crate::rep::DEFAULT_DIM_CAP;

    fn w(n: usize, coords: &[i64]) -> Weight {
        Weight::new(n, coords.to_vec())
    }

    fn pair(i: usize, j: usize) -> PairIndex {
        PairIndex::new(i, j)
    }

    #[test]
    fn word_weights() {
        assert_eq!(word_weight(&[]), 0);
        assert_eq!(word_weight(&[pair(1, 3)]), 2);
        assert_eq!(word_weight(&[pair(1, 2), pair(2, 3)]), 2);
    }

    #[test]
    fn word_order_examples() {
        assert!(word_less(&[pair(1, 2)], &[pair(1, 3)]));
        assert!(word_less(&[pair(1, 3)], &[pair(2, 4)]));
        assert!(!word_less(&[pair(2, 4)], &[pair(1, 3)]));
        // equal words are not less
        assert!(!word_less(&[pair(1, 2)], &[pair(1, 2)]));
    }

    #[test]
    fn word_order_translation_invariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let pairs = all_pairs(4);
        let mut random_word = |max_len: usize| -> FreeWord {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| pairs[rng.gen_range(0..pairs.len())]).collect()
        };
        for _ in 0..300 {
            let x = random_word(3);
            let y = random_word(3);
            let z = random_word(2);
            if x == y {
                continue;
            }
            let less = word_less(&x, &y);
            let mut zx = z.clone();
            zx.extend(x.iter().copied());
            let mut zy = z.clone();
            zy.extend(y.iter().copied());
            assert_eq!(word_less(&zx, &zy), less);
            let mut xz = x.clone();
            xz.extend(z.iter().copied());
            let mut yz = y.clone();
            yz.extend(z.iter().copied());
            assert_eq!(word_less(&xz, &yz), less);
        }
    }

    #[test]
    fn normal_form_rules() {
        // descent in first indices vanishes
        assert_eq!(u_prec_normal(3, &[pair(2, 3), pair(1, 2)]), None);
        // second-index descent inside an equal-first-index run vanishes
        assert_eq!(u_prec_normal(3, &[pair(1, 3), pair(1, 2)]), None);
        // the ascending word survives
        let t = u_prec_normal(3, &[pair(1, 2), pair(1, 3)]).unwrap();
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.get(1, 3), 1);
        assert_eq!(u_prec_normal(3, &[]), Some(ThetaPoint::zero(3)));
    }

    #[test]
    fn nonzero_words_biject_with_tables() {
        // words of length <= 3 for n=3: the surviving ones are exactly the
        // canonical words, one per exponent table
        let n = 3;
        let pairs = all_pairs(n);
        let mut words: Vec<FreeWord> = vec![Vec::new()];
        let mut level: Vec<FreeWord> = vec![Vec::new()];
        for _ in 0..3 {
            let mut next = Vec::new();
            for wrd in &level {
                for &p in &pairs {
                    let mut w2: FreeWord = wrd.clone();
                    w2.push(p);
                    next.push(w2);
                }
            }
            words.extend(next.iter().cloned());
            level = next;
        }
        let mut tables = std::collections::BTreeSet::new();
        let mut survivors = 0usize;
        for wrd in &words {
            if let Some(t) = u_prec_normal(n, wrd) {
                survivors += 1;
                assert_eq!(canonical_word(&t), *wrd, "survivors are canonical");
                tables.insert(t);
            }
        }
        assert_eq!(survivors, tables.len());
    }

    #[test]
    fn gate_rules() {
        let open = ThetaPoint::zero(3);
        for p in all_pairs(3) {
            assert!(d_tensor_gate(p, &open));
        }
        let mut g = ThetaPoint::zero(3);
        g.set(1, 2, 1);
        assert!(!d_tensor_gate(pair(2, 3), &g));
        assert!(!d_tensor_gate(pair(1, 3), &g));
        assert!(d_tensor_gate(pair(1, 2), &g));
    }

    #[test]
    fn essential_matches_polytope_sl3() {
        let lam = w(3, &[1, 1]);
        let g = identity_g(3);
        let ess = essential_all(&lam, &g, DEFAULT_DIM_CAP).unwrap();
        let pi: std::collections::BTreeSet<ThetaPoint> = pi_lambda(&lam, DEFAULT_POINT_BUDGET)
            .unwrap()
            .iter()
            .cloned()
            .collect();
        assert_eq!(ess, pi);
    }

    #[test]
    fn essential_fundamentals() {
        for n in 3..=4usize {
            for k in 1..n {
                let lam = Weight::fundamental(n, k);
                let g = identity_g(n);
                let ess = essential_all(&lam, &g, DEFAULT_DIM_CAP).unwrap();
                let pi: std::collections::BTreeSet<ThetaPoint> =
                    pi_lambda(&lam, DEFAULT_POINT_BUDGET)
                        .unwrap()
                        .iter()
                        .cloned()
                        .collect();
                assert_eq!(ess, pi, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn essential_zero_weight() {
        let lam = w(3, &[0, 0]);
        let g = identity_g(3);
        let ess = essential_all(&lam, &g, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(ess.len(), 1);
        assert!(ess.contains(&ThetaPoint::zero(3)));
    }

    #[test]
    fn essential_single_weight_space() {
        let lam = w(3, &[1, 1]);
        let g = identity_g(3);
        // the lowest weight space of the adjoint: mu = -lambda reversed
        let mu = w(3, &[-1, -1]);
        let ess = essential_signatures(&lam, &mu, &g, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(ess.len(), 1);
        // weight spaces outside the support are empty
        let ess = essential_signatures(&lam, &w(3, &[5, 5]), &g, DEFAULT_DIM_CAP).unwrap();
        assert!(ess.is_empty());
    }

    #[test]
    fn reweighting_invariance_small() {
        let lam = w(3, &[1, 1]);
        let base = essential_all(&lam, &identity_g(3), DEFAULT_DIM_CAP).unwrap();
        for g in [[0i64, 1, 3, 4], [0, 2, 3, 7], [0, 1, 5, 6]] {
            let ess = essential_all(&lam, &g, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(ess, base, "g={g:?}");
        }
    }

    #[test]
    fn cartan_checks() {
        assert!(prec_cartan_check(&w(3, &[1, 0]), &w(3, &[0, 1]), DEFAULT_POINT_BUDGET).unwrap());
        assert!(prec_cartan_check(&w(3, &[1, 1]), &w(3, &[1, 1]), DEFAULT_POINT_BUDGET).unwrap());
        assert!(prec_cartan_check(&w(3, &[0, 0]), &w(3, &[1, 1]), DEFAULT_POINT_BUDGET).unwrap());
    }

    #[test]
    fn gated_expansion_counts_decompositions() {
        let lam = w(3, &[1, 0]);
        let mu = w(3, &[0, 1]);
        let set_l: std::collections::BTreeSet<ThetaPoint> =
            pi_lambda(&lam, DEFAULT_POINT_BUDGET).unwrap().iter().cloned().collect();
        let set_m: std::collections::BTreeSet<ThetaPoint> =
            pi_lambda(&mu, DEFAULT_POINT_BUDGET).unwrap().iter().cloned().collect();
        // T = 11/0 decomposes as T(1)+T(2,3) and T(2)+T(1,3)
        let t = ThetaPoint::from_coords(3, [((1, 2), 1), ((2, 3), 1)]);
        let expansion = gated_tensor_expansion(&t, &set_l, &set_m);
        assert_eq!(expansion.len(), 2);
    }

    #[test]
    fn toric_pairing_kernel_sl3() {
        let lam = w(3, &[1, 1]);
        assert!(prec_toric_matches(&lam, 10_000).unwrap());
        let comp = prec_toric_kernel(&lam, 10_000).unwrap();
        assert_eq!(comp.dim(), 1);
        // projective space degree has no relations
        let comp = prec_toric_kernel(&w(3, &[1, 0]), 10_000).unwrap();
        assert_eq!(comp.dim(), 0);
    }

    #[test]
    fn toric_pairing_kernel_gr24() {
        assert!(prec_toric_matches(&w(4, &[0, 2, 0]), 10_000).unwrap());
    }
}
