//! Free nilpotent Lie algebras on a Hall basis, and presentations `L = F/I`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{AdoError, Result};
use crate::lie::{self, LieAlgebra, LieHom};
use crate::linalg::{RationalMatrix, SparseVec, Subspace};

/// Default cap on the dimension of a free nilpotent algebra.
pub const DEFAULT_FREE_BUDGET: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HallTree {
    /// Generator `g_{k+1}`.
    Generator(usize),
    /// `[left, right]`, both given by Hall index.
    Bracket(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HallWord {
    pub index: usize,
    pub degree: usize,
    pub tree: HallTree,
}

/// Hall words of degree at most `class` on `rank` generators.
///
/// Ordered by degree, then by `(left index, right index)`. A bracket `[u, v]` is
/// a Hall word when `u > v` and, if `u = [a, b]`, also `b <= v`.
pub fn hall_basis(rank: usize, class: usize) -> Vec<HallWord> {
    let mut words: Vec<HallWord> = Vec::new();
    if class == 0 {
        return words;
    }
    let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(); class + 1];
    for g in 0..rank {
        words.push(HallWord {
            index: g,
            degree: 1,
            tree: HallTree::Generator(g),
        });
        by_degree[1].push(g);
    }
    for d in 2..=class {
        let mut pairs = Vec::new();
        for du in 1..d {
            for &u in &by_degree[du] {
                for &v in &by_degree[d - du] {
                    if u <= v {
                        continue;
                    }
                    let hall = match words[u].tree {
                        HallTree::Generator(_) => true,
                        HallTree::Bracket(_, b) => b <= v,
                    };
                    if hall {
                        pairs.push((u, v));
                    }
                }
            }
        }
        pairs.sort_unstable();
        for (u, v) in pairs {
            let index = words.len();
            words.push(HallWord {
                index,
                degree: d,
                tree: HallTree::Bracket(u, v),
            });
            by_degree[d].push(index);
        }
    }
    words
}

pub fn hall_label(words: &[HallWord], i: usize) -> String {
    match words[i].tree {
        HallTree::Generator(g) => format!("g{}", g + 1),
        HallTree::Bracket(u, v) => format!("[{},{}]", hall_label(words, u), hall_label(words, v)),
    }
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`degree` part of the free Lie algebra of rank `rank`:
/// `(1/d) Σ_{e | d} μ(e) r^{d/e}`.
pub fn witt_dimension(rank: usize, degree: usize) -> usize {
    assert!(degree >= 1, "degree must be positive");
    let r = BigInt::from(rank);
    let mut total = BigInt::zero();
    for e in (1..=degree).filter(|e| degree.is_multiple_of(*e)) {
        let mu = mobius(e);
        if mu != 0 {
            total += BigInt::from(mu) * r.pow((degree / e) as u32);
        }
    }
    (total / BigInt::from(degree))
        .to_usize()
        .expect("Witt dimension fits in usize")
}

pub fn free_nilpotent_dim(rank: usize, class: usize) -> usize {
    (1..=class).map(|d| witt_dimension(rank, d)).sum()
}

/// Rewrites brackets of Hall words back into the Hall basis, truncating above the class.
struct HallRewriter<'a> {
    words: &'a [HallWord],
    class: usize,
    index_of: HashMap<(usize, usize), usize>,
    memo: HashMap<(usize, usize), SparseVec>,
}

impl<'a> HallRewriter<'a> {
    fn new(words: &'a [HallWord], class: usize) -> Self {
        let index_of = words
            .iter()
            .filter_map(|w| match w.tree {
                HallTree::Bracket(u, v) => Some(((u, v), w.index)),
                HallTree::Generator(_) => None,
            })
            .collect();
        Self {
            words,
            class,
            index_of,
            memo: HashMap::new(),
        }
    }

    fn bracket_combination(&mut self, a: usize, combo: &SparseVec, left: bool) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, c) in combo.iter() {
            let term = if left { self.bracket(a, k) } else { self.bracket(k, a) };
            out = out.add_scaled(&term, c);
        }
        out
    }

    /// `[w_a, w_b]` in the Hall basis.
    fn bracket(&mut self, a: usize, b: usize) -> SparseVec {
        if a == b || self.words[a].degree + self.words[b].degree > self.class {
            return SparseVec::new();
        }
        if a < b {
            return self.bracket(b, a).neg();
        }
        if let Some(v) = self.memo.get(&(a, b)) {
            return v.clone();
        }
        let result = match self.words[a].tree {
            HallTree::Bracket(x, y) if y > b => {
                // [[x,y],b] = [x,[y,b]] + [[x,b],y]
                let yb = self.bracket(y, b);
                let xb = self.bracket(x, b);
                let first = self.bracket_combination(x, &yb, true);
                let second = self.bracket_combination(y, &xb, false);
                first.add(&second)
            }
            _ => SparseVec::unit(
                *self
                    .index_of
                    .get(&(a, b))
                    .expect("standard bracket of Hall words within the class is a Hall word"),
            ),
        };
        self.memo.insert((a, b), result.clone());
        result
    }
}

/// Free nilpotent Lie algebra of the given rank and class on its Hall basis,
/// graded by word degree.
pub fn free_nilpotent(rank: usize, class: usize, budget: usize) -> Result<LieAlgebra> {
    let dim = free_nilpotent_dim(rank, class);
    if dim > budget {
        return Err(AdoError::BudgetExceeded {
            what: format!("free nilpotent algebra of rank {rank} and class {class}"),
            dim,
            budget,
        });
    }
    let words = hall_basis(rank, class);
    debug_assert_eq!(words.len(), dim);
    let mut rewriter = HallRewriter::new(&words, class);
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let v = rewriter.bracket(i, j);
            if !v.is_zero() {
                brackets.push(((i, j), v));
            }
        }
    }
    let labels = (0..dim).map(|i| hall_label(&words, i)).collect();
    let degrees = words.iter().map(|w| w.degree as u32).collect();
    LieAlgebra::new(format!("free{rank}_{class}"), dim, brackets)?
        .with_labels(labels)?
        .with_grading(degrees)
}

/// `L` presented as `F/I` with `F` free nilpotent.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub free: LieAlgebra,
    pub algebra: LieAlgebra,
    pub projection: LieHom,
    pub ideal: Subspace,
    pub rank: usize,
    pub class: usize,
    /// Basis indices of `L` that the free generators map to.
    pub generators: Vec<usize>,
}

/// Minimal-rank presentation: generators lift a basis of `L/[L,L]` (the non-pivot
/// coordinates of `[L,L]`), and the class matches the nilpotency class of `L`.
pub fn present(l: &LieAlgebra, budget: usize) -> Result<Presentation> {
    let class = lie::nilpotency_class(l)?;
    let series = lie::lower_central_series(l);
    let derived = series.get(1).cloned().unwrap_or_else(|| Subspace::zero(l.dim()));
    let generators = derived.non_pivots();
    let rank = generators.len();
    let free = free_nilpotent(rank, class, budget)?;
    let words = hall_basis(rank, class);

    let mut images: Vec<SparseVec> = Vec::with_capacity(words.len());
    for w in &words {
        let img = match w.tree {
            HallTree::Generator(g) => SparseVec::unit(generators[g]),
            HallTree::Bracket(u, v) => l.bracket(&images[u], &images[v]),
        };
        images.push(img);
    }
    let projection = LieHom::new(
        free.clone(),
        l.clone(),
        RationalMatrix::from_columns(l.dim(), &images),
    )?;
    if !projection.is_surjective() {
        return Err(AdoError::VerificationFailed(format!(
            "generators of {} do not generate it",
            l.name()
        )));
    }
    let ideal = projection.kernel();
    if !lie::is_ideal(&free, &ideal) {
        return Err(AdoError::VerificationFailed("presentation kernel is not an ideal".into()));
    }
    Ok(Presentation {
        free,
        algebra: l.clone(),
        projection,
        ideal,
        rank,
        class,
        generators,
    })
}
