//! The parametrizing cone of degenerations: membership and tight facets, the
//! map sigma onto Pluecker gradings and its inverse, the minimal
//! H-description, boundary certificates, and the mirrored constructions
//! eta, eta*, Upsilon, T-tilde and sigma-tilde.

use crate::error::{Error, Result};
use crate::ideals::{
    initial_ideal_component, toric_component, IdealComponent, DEFAULT_MONOMIAL_CAP,
};
use crate::lie::{all_tuples, PlueckerIndex, Weight};
use crate::polytope::{t_of_tuple, ThetaPoint};
use crate::rep::{GradingS, WeightingA};
use rand::Rng;
use std::collections::BTreeMap;

/// A facet of the cone: family (a) indexed by i, family (b) by (i, j).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Facet {
    A(usize),
    B(usize, usize),
}

/// All facets for a given n, (n-1 choose 2) of them.
pub fn facets(n: usize) -> Vec<Facet> {
    let mut out = Vec::new();
    for i in 1..=n.saturating_sub(2) {
        out.push(Facet::A(i));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(Facet::B(i, j));
        }
    }
    out
}

fn slack(a: &WeightingA, f: Facet) -> i64 {
    match f {
        Facet::A(i) => a.get(i, i + 2) - a.get(i, i + 1) - a.get(i + 1, i + 2),
        Facet::B(i, j) => a.get(i, j + 1) + a.get(i + 1, j) - a.get(i, j) - a.get(i + 1, j + 1),
    }
}

/// Membership report for the cone inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub member: bool,
    pub tight_a: Vec<usize>,
    pub tight_b: Vec<(usize, usize)>,
    pub interior: bool,
}

impl ConeReport {
    pub fn tight_facets(&self) -> Vec<Facet> {
        let mut out: Vec<Facet> = self.tight_a.iter().map(|&i| Facet::A(i)).collect();
        out.extend(self.tight_b.iter().map(|&(i, j)| Facet::B(i, j)));
        out
    }
}

/// Evaluates the defining inequalities and reports tight facets. Whenever the
/// short list holds, the full triangle and exchange inequalities are checked
/// as a consistency assertion.
pub fn cone_check(a: &WeightingA) -> ConeReport {
    let n = a.n();
    let mut member = true;
    let mut tight_a = Vec::new();
    let mut tight_b = Vec::new();
    for f in facets(n) {
        let s = slack(a, f);
        if s < 0 {
            member = false;
        } else if s == 0 {
            match f {
                Facet::A(i) => tight_a.push(i),
                Facet::B(i, j) => tight_b.push((i, j)),
            }
        }
    }
    if member {
        // the derived families: a_{i,j} + a_{j,k} <= a_{i,k} and
        // a_{i,j} + a_{k,l} <= a_{i,l} + a_{k,j} for i < k < j < l
        for i in 1..n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    assert!(
                        a.get(i, j) + a.get(j, k) <= a.get(i, k),
                        "triangle inequality must follow from the facet list"
                    );
                }
            }
        }
        for i in 1..n {
            for k in i + 1..n {
                for j in k + 1..=n {
                    for l in j + 1..=n {
                        assert!(
                            a.get(i, j) + a.get(k, l) <= a.get(i, l) + a.get(k, j),
                            "exchange inequality must follow from the facet list"
                        );
                    }
                }
            }
        }
    }
    let interior = member && tight_a.is_empty() && tight_b.is_empty();
    ConeReport {
        member,
        tight_a,
        tight_b,
        interior,
    }
}

/// The grading sigma(A): s_{i_1,...,i_k} = A(T(i_1,...,i_k)).
pub fn sigma(a: &WeightingA) -> GradingS {
    let n = a.n();
    let mut s = BTreeMap::new();
    for k in 1..n {
        for idx in all_tuples(n, k) {
            let v = a.of(&t_of_tuple(n, &idx));
            s.insert(idx, v);
        }
    }
    GradingS::new(n, s)
}

/// The tuple (1, ..., i-1, j) whose sigma-value recovers a_{i,j}.
fn head_tuple(i: usize, j: usize) -> PlueckerIndex {
    let mut vals: Vec<usize> = (1..i).collect();
    vals.push(j);
    PlueckerIndex::new(vals)
}

/// Reconstructs A from a grading via a_{i,j} = s_{1,...,i-1,j}; returns None
/// when the grading is not of the form sigma(A).
pub fn sigma_inverse(s: &GradingS) -> Option<WeightingA> {
    let n = s.n();
    let mut a = WeightingA::zero(n);
    for i in 1..n {
        for j in i + 1..=n {
            a.set(i, j, s.get(&head_tuple(i, j)));
        }
    }
    if &sigma(&a) == s {
        Some(a)
    } else {
        None
    }
}

/// Minimal H-description of the image cone sigma(K): the linear relations
/// expressing every coordinate through the head coordinates s_{1,...,i-1,j},
/// plus the two families of inequalities on the head coordinates.
pub fn h_description_check(s: &GradingS) -> bool {
    let n = s.n();
    let b = |i: usize, j: usize| s.get(&head_tuple(i, j));
    for k in 1..n {
        for idx in all_tuples(n, k) {
            let t = t_of_tuple(n, &idx);
            let expect: i64 = t.support().map(|(&(i, j), &v)| v * b(i, j)).sum();
            if s.get(&idx) != expect {
                return false;
            }
        }
    }
    for i in 1..=n.saturating_sub(2) {
        if b(i, i + 1) + b(i + 1, i + 2) > b(i, i + 2) {
            return false;
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            if b(i, j) + b(i + 1, j + 1) > b(i, j + 1) + b(i + 1, j) {
                return false;
            }
        }
    }
    true
}

/// Builds an integer weighting with prescribed nearest-neighbour values and
/// facet slacks. Every slack pattern is attainable, so this parametrizes
/// points of the cone with chosen tight facets.
pub fn from_slacks(
    n: usize,
    head: &[i64],
    slack_of: impl Fn(Facet) -> i64,
) -> WeightingA {
    assert_eq!(head.len(), n - 1);
    let mut a = WeightingA::zero(n);
    for (i, &h) in head.iter().enumerate() {
        a.set(i + 1, i + 2, h);
    }
    for i in 1..=n.saturating_sub(2) {
        let v = slack_of(Facet::A(i)) + a.get(i, i + 1) + a.get(i + 1, i + 2);
        a.set(i, i + 2, v);
    }
    // distance d >= 3 entries come from the exchange slacks, shortest first
    for d in 3..n {
        for i in 1..=n - d {
            let j = i + d - 1;
            let v = slack_of(Facet::B(i, j)) + a.get(i, j) + a.get(i + 1, j + 1) - a.get(i + 1, j);
            a.set(i, j + 1, v);
        }
    }
    a
}

/// A canonical strictly interior point of the cone.
pub fn strict_interior(n: usize) -> WeightingA {
    from_slacks(n, &vec![-1; n - 1], |_| 1)
}

/// A boundary point tight exactly at the given facet.
pub fn tight_at(n: usize, facet: Facet) -> WeightingA {
    from_slacks(n, &vec![-1; n - 1], |f| if f == facet { 0 } else { 1 })
}

/// Seeded random cone member; boundary facets appear with probability ~1/3.
pub fn random_in_k(n: usize, rng: &mut impl Rng) -> WeightingA {
    let head: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-3..=3)).collect();
    let slacks: BTreeMap<Facet, i64> = facets(n)
        .into_iter()
        .map(|f| {
            let s = if rng.gen_bool(1.0 / 3.0) {
                0
            } else {
                rng.gen_range(1..=3)
            };
            (f, s)
        })
        .collect();
    from_slacks(n, &head, |f| slacks[&f])
}

/// Boundary certificate for one tight facet: a binomial that lies in the
/// toric component but not in the initial component of its degree.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub facet: Facet,
    pub plus: (PlueckerIndex, PlueckerIndex),
    pub minus: (PlueckerIndex, PlueckerIndex),
    pub in_toric: bool,
    pub not_in_initial: bool,
}

impl Certificate {
    pub fn verified(&self) -> bool {
        self.in_toric && self.not_in_initial
    }

    pub fn to_json(&self) -> serde_json::Value {
        let facet = match self.facet {
            Facet::A(i) => serde_json::json!({ "family": "a", "indices": [i] }),
            Facet::B(i, j) => serde_json::json!({ "family": "b", "indices": [i, j] }),
        };
        serde_json::json!({
            "facet": facet,
            "binomial": format!(
                "X{}*X{} - X{}*X{}",
                self.plus.0, self.plus.1, self.minus.0, self.minus.1
            ),
            "in_toric_ideal": self.in_toric,
            "not_in_initial_ideal": self.not_in_initial,
        })
    }
}

fn certificate_binomial(facet: Facet) -> ((PlueckerIndex, PlueckerIndex), (PlueckerIndex, PlueckerIndex)) {
    let prefix = |upto: usize| -> Vec<usize> { (1..=upto).collect() };
    match facet {
        Facet::A(i) => {
            let mut u = prefix(i - 1);
            u.extend([i + 1, i + 2]);
            let mut p1 = prefix(i - 1);
            p1.push(i + 1);
            let mut p2 = prefix(i);
            p2.push(i + 2);
            (
                (PlueckerIndex::new(prefix(i)), PlueckerIndex::new(u)),
                (PlueckerIndex::new(p1), PlueckerIndex::new(p2)),
            )
        }
        Facet::B(i, j) => {
            let mut u = prefix(i - 1);
            u.extend([j, j + 1]);
            let mut p1 = prefix(i - 1);
            p1.push(j);
            let mut p2 = prefix(i);
            p2.push(j + 1);
            (
                (PlueckerIndex::new(prefix(i)), PlueckerIndex::new(u)),
                (PlueckerIndex::new(p1), PlueckerIndex::new(p2)),
            )
        }
    }
}

/// For each tight facet of a boundary weighting, emits the designated
/// binomial and verifies the separation at the binomial's wt-degree.
pub fn maxcone_certificate(a: &WeightingA) -> Result<Vec<Certificate>> {
    let n = a.n();
    let report = cone_check(a);
    if !report.member {
        return Err(Error::BadInput("weighting is outside the cone".into()));
    }
    if report.interior {
        return Err(Error::InteriorWeighting);
    }
    let mut out = Vec::new();
    for facet in report.tight_facets() {
        let (plus, minus) = certificate_binomial(facet);
        // both monomials have degree omega_i + omega_{i+1}
        let deg_len = plus.0.len();
        let mut coords = vec![0i64; n - 1];
        coords[deg_len - 1] += 1;
        coords[deg_len] += 1;
        let lambda = Weight::new(n, coords);
        let toric = toric_component(&lambda, DEFAULT_MONOMIAL_CAP)?;
        let initial = initial_ideal_component(&lambda, a, DEFAULT_MONOMIAL_CAP)?;
        let vec = toric
            .binomial_vector((&plus.0, &plus.1), (&minus.0, &minus.1))
            .expect("binomial monomials lie in the certificate degree");
        let in_toric = toric.contains(&vec);
        let not_in_initial = !initial.contains(&vec);
        out.push(Certificate {
            facet,
            plus,
            minus,
            in_toric,
            not_in_initial,
        });
    }
    Ok(out)
}

/// The coordinate flip eta(T)_{i,j} = T_{n+1-j,n+1-i}.
pub fn eta(t: &ThetaPoint) -> ThetaPoint {
    let n = t.n();
    let mut out = ThetaPoint::zero(n);
    for i in 1..n {
        for j in i + 1..=n {
            let v = t.get(n + 1 - j, n + 1 - i);
            out.set(i, j, v);
        }
    }
    out
}

/// The dual flip on weightings, eta*(A)_{i,j} = A_{n+1-j,n+1-i}.
pub fn eta_star(a: &WeightingA) -> WeightingA {
    let n = a.n();
    let mut out = WeightingA::zero(n);
    for i in 1..n {
        for j in i + 1..=n {
            out.set(i, j, a.get(n + 1 - j, n + 1 - i));
        }
    }
    out
}

/// Complement-and-reflect substitution on Pluecker indices.
pub fn upsilon(n: usize, idx: &PlueckerIndex) -> PlueckerIndex {
    let complement: Vec<usize> = (1..=n).filter(|v| !idx.contains(*v)).collect();
    let mapped: Vec<usize> = complement.iter().rev().map(|&v| n + 1 - v).collect();
    PlueckerIndex::new(mapped)
}

/// The mirrored vertex: coordinate (j_m, m) is 1 for each complement element
/// j_m < m, where j_{k+1} < ... < j_n is the complement of the tuple.
pub fn tilde_t(n: usize, idx: &PlueckerIndex) -> ThetaPoint {
    let k = idx.len();
    let complement: Vec<usize> = (1..=n).filter(|v| !idx.contains(*v)).collect();
    let mut t = ThetaPoint::zero(n);
    for (pos, &jm) in complement.iter().enumerate() {
        let m = k + 1 + pos;
        if jm < m {
            t.set(jm, m, 1);
        }
    }
    t
}

/// Mirrored vertex set of a fundamental weight.
pub fn pi_tilde_fundamental(n: usize, k: usize) -> crate::polytope::LatticeSet {
    crate::polytope::LatticeSet::from_points(
        n,
        all_tuples(n, k).iter().map(|idx| tilde_t(n, idx)),
    )
}

/// Mirrored Minkowski sum over the fundamental multiplicities of lambda.
pub fn pi_tilde_lambda(
    lambda: &Weight,
    budget: usize,
) -> Result<crate::polytope::LatticeSet> {
    let n = lambda.n();
    let mut acc = crate::polytope::LatticeSet::from_points(n, [ThetaPoint::zero(n)]);
    for k in 1..n {
        let fk = pi_tilde_fundamental(n, k);
        for _ in 0..lambda.coord(k) {
            acc = crate::polytope::minkowski_sum(&acc, &fk, budget)?;
        }
    }
    Ok(acc)
}

/// The mirrored grading sigma-tilde(A)_{i_1,...,i_k} = A(T-tilde(i_1,...,i_k)).
pub fn sigma_tilde(a: &WeightingA) -> GradingS {
    let n = a.n();
    let mut s = BTreeMap::new();
    for k in 1..n {
        for idx in all_tuples(n, k) {
            s.insert(idx.clone(), a.of(&tilde_t(n, &idx)));
        }
    }
    GradingS::new(n, s)
}

/// Projection of sigma(A) onto the variables of the lengths in `d`, the other
/// coordinates set to zero. Experimental partial-flag helper.
pub fn sigma_d(a: &WeightingA, d: &std::collections::BTreeSet<usize>) -> GradingS {
    let n = a.n();
    let full = sigma(a);
    let mut s = BTreeMap::new();
    for k in 1..n {
        for idx in all_tuples(n, k) {
            let v = if d.contains(&k) { full.get(&idx) } else { 0 };
            s.insert(idx, v);
        }
    }
    GradingS::new(n, s)
}

/// Upsilon applied to an ideal component, landing in the reversed wt-degree.
pub fn upsilon_component(component: &IdealComponent) -> IdealComponent {
    let n = component.lambda.n();
    let target = component.lambda.reversed();
    crate::ideals::map_component_monomials(component, target, |idx| upsilon(n, idx))
}
