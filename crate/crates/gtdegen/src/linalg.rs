//! Exact rational sparse linear algebra: echelon spans, rank, kernel bases
//! and span membership.
//!
//! All eliminations pivot on the smallest key of a vector, so results depend
//! only on the key order, never on entry insertion order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rat = BigRational;

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Sparse vector over an ordered key space. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<K: Ord + Clone> {
    terms: BTreeMap<K, Rat>,
}

impl<K: Ord + Clone> Default for SparseVec<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn zero() -> Self {
        SparseVec {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(key: K) -> Self {
        Self::single(key, Rat::one())
    }

    pub fn single(key: K, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        SparseVec { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rat)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &K) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rat)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Smallest key together with its coefficient.
    pub fn leading(&self) -> Option<(&K, &Rat)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, key: K, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// self += coeff * other
    pub fn add_scaled(&mut self, other: &Self, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in other.terms.iter() {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&mut self, coeff: &Rat) {
        if coeff.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c = &*c * coeff;
        }
    }

    pub fn scaled(&self, coeff: &Rat) -> Self {
        let mut v = self.clone();
        v.scale(coeff);
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = self.clone();
        v.add_scaled(other, &Rat::one());
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut v = self.clone();
        v.add_scaled(other, &-Rat::one());
        v
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> SparseVec<K2> {
        SparseVec::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Clears denominators and divides by the integer content, making the
    /// leading coefficient positive. Purely cosmetic normalization.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = intops::lcm(den, c.denom().clone());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            gcd = intops::gcd(gcd, c.numer() * &den / c.denom());
        }
        if gcd.is_zero() {
            gcd = BigInt::one();
        }
        let lead = self.leading().unwrap().1;
        if lead.is_negative() {
            gcd = -gcd;
        }
        let factor = Rat::new(den, gcd);
        self.scaled(&factor)
    }
}

mod intops {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    pub fn gcd(a: BigInt, b: BigInt) -> BigInt {
        let (mut a, mut b) = (a.abs(), b.abs());
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a
    }

    pub fn lcm(a: BigInt, b: BigInt) -> BigInt {
        if a.is_zero() || b.is_zero() {
            return BigInt::zero();
        }
        let g = gcd(a.clone(), b.clone());
        a / g * b
    }
}

/// Row echelon span with pivots on the smallest keys. Pivot vectors are monic
/// at their pivot key; they are not back-reduced against each other.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_keys(&self) -> impl Iterator<Item = &K> {
        self.pivots.keys()
    }

    /// Reduces `v` against the stored pivots until its leading key is pivot-free.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        while let Some((k, c)) = v.leading() {
            match self.pivots.get(k) {
                Some(p) => {
                    let c = -c.clone();
                    v.add_scaled(p, &c);
                }
                None => break,
            }
        }
        v
    }

    /// Inserts `v` into the span. Returns true when the rank increased.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some((k, c)) => {
                let k = k.clone();
                let inv = c.recip();
                self.pivots.insert(k, r.scaled(&inv));
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

/// Echelon span that remembers how each pivot was built from the inserted
/// vectors. Dependent insertions yield exact linear relations, independent
/// ones can later be used to express vectors in terms of the inserted set.
#[derive(Clone, Debug, Default)]
pub struct TrackedEchelon<K: Ord + Clone> {
    pivots: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)>,
}

impl<K: Ord + Clone> TrackedEchelon<K> {
    pub fn new() -> Self {
        TrackedEchelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce_tracked(&self, mut v: SparseVec<K>, mut combo: SparseVec<usize>) -> (SparseVec<K>, SparseVec<usize>) {
        while let Some((k, c)) = v.leading() {
            match self.pivots.get(k) {
                Some((p, pc)) => {
                    let c = -c.clone();
                    v.add_scaled(p, &c);
                    combo.add_scaled(pc, &c);
                }
                None => break,
            }
        }
        (v, combo)
    }

    /// Inserts vector number `index`. When the vector is dependent on the
    /// previously inserted ones, returns the relation as coefficients over
    /// insertion indices (the coefficient at `index` is 1).
    pub fn insert(&mut self, index: usize, v: SparseVec<K>) -> Option<SparseVec<usize>> {
        let (r, combo) = self.reduce_tracked(v, SparseVec::unit(index));
        match r.leading() {
            None => Some(combo),
            Some((k, c)) => {
                let k = k.clone();
                let inv = c.recip();
                self.pivots.insert(k, (r.scaled(&inv), combo.scaled(&inv)));
                None
            }
        }
    }

    /// Expresses `v` as a combination of the inserted vectors, if possible.
    pub fn express(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (r, combo) = self.reduce_tracked(v.clone(), SparseVec::zero());
        if r.is_zero() {
            let mut c = combo;
            c.scale(&-Rat::one());
            Some(c)
        } else {
            None
        }
    }
}

/// Sparse matrix over the rationals. Entries are stored row-major; zero
/// entries are never stored.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rat) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rat {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec<usize>]) -> Self {
        let mut m = SparseMatrix::new(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    fn columns(&self) -> Vec<SparseVec<usize>> {
        let mut cols = vec![SparseVec::zero(); self.cols];
        for ((i, j), c) in self.entries.iter() {
            cols[*j].add_term(*i, c.clone());
        }
        cols
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for col in self.columns() {
            ech.insert(col);
        }
        ech.rank()
    }

    /// Basis of the right kernel. Each basis vector carries coefficient 1 at
    /// its free column and is supported on that column and earlier pivot
    /// columns, which determines it uniquely; free columns appear in
    /// increasing order.
    pub fn kernel_basis(&self) -> Vec<SparseVec<usize>> {
        let mut ech = TrackedEchelon::new();
        let mut kernel = Vec::new();
        for (j, col) in self.columns().into_iter().enumerate() {
            if let Some(rel) = ech.insert(j, col) {
                kernel.push(rel);
            }
        }
        kernel
    }

    /// Matrix-vector product, `x` indexed by columns.
    pub fn mul_vec(&self, x: &SparseVec<usize>) -> SparseVec<usize> {
        let cols = self.columns();
        let mut out = SparseVec::zero();
        for (j, c) in x.iter() {
            out.add_scaled(&cols[*j], c);
        }
        out
    }
}

/// True iff `v` lies in the rational span of `basis`.
pub fn in_span<K: Ord + Clone>(v: &SparseVec<K>, basis: &[SparseVec<K>]) -> bool {
    let mut ech = Echelon::new();
    for b in basis {
        ech.insert(b.clone());
    }
    ech.contains(v)
}

/// Exact determinant of a dense square matrix by fraction elimination.
pub fn dense_det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            let pivot_row = m[col].clone();
            for (entry, pv) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                let sub = &factor * pv;
                *entry = &*entry - &sub;
            }
        }
    }
    det
}
