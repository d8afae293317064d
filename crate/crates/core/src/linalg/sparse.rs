use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Sparse vector: strictly increasing indices, no stored zeros.
///
/// The vector carries no length; callers track the ambient dimension.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: vec![(i, Rational::one())],
        }
    }

    /// Builds from arbitrary `(index, value)` pairs; duplicates are summed and zeros dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut entries: Vec<(usize, Rational)> = pairs.into_iter().collect();
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Self { entries: out }
    }

    /// Takes already sorted, zero-free entries.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        Self { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    /// First stored entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// Largest stored index plus one (0 for the zero vector).
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |(i, _)| i + 1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, other: &SparseVec, c: &Rational) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => match i.cmp(j) {
                    Ordering::Less => {
                        out.push((*i, x.clone()));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*j, y * c));
                        b.next();
                    }
                    Ordering::Equal => {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            match i.cmp(j) {
                Ordering::Less => {
                    a.next();
                }
                Ordering::Greater => {
                    b.next();
                }
                Ordering::Equal => {
                    acc += x * y;
                    a.next();
                    b.next();
                }
            }
        }
        acc
    }

    /// Applies `f` to every index; `f` must be strictly increasing.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_sorted_unchecked(self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect())
    }

    /// Restricts to the index window `[start, start + len)` and shifts it to begin at 0.
    pub fn window(&self, start: usize, len: usize) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < start + len)
                .map(|(i, v)| (i - start, v.clone()))
                .collect(),
        }
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        Self::from_pairs(iter)
    }
}

/// Dense scratch accumulator for building one sparse row from many scaled rows.
pub(crate) struct Accumulator {
    values: Vec<Rational>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub fn new(len: usize) -> Self {
        Self {
            values: vec![Rational::zero(); len],
            touched: Vec::new(),
            mark: vec![false; len],
        }
    }

    pub fn add_scaled(&mut self, v: &SparseVec, c: &Rational) {
        for (i, x) in v.iter() {
            if !self.mark[i] {
                self.mark[i] = true;
                self.touched.push(i);
            }
            self.values[i] += x * c;
        }
    }

    /// Drains into a sparse vector, leaving the accumulator cleared for reuse.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.mark[i] = false;
            let v = std::mem::replace(&mut self.values[i], Rational::zero());
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        SparseVec::from_sorted_unchecked(out)
    }
}
