//! Built-in example algebras and a few small representations used in tests and the CLI.

use crate::error::{AdoError, Result};
use crate::free::{self, DEFAULT_FREE_BUDGET};
use crate::lie::LieAlgebra;
use crate::linalg::{RationalMatrix, SparseVec};
use crate::rep::Representation;

/// `[e0, e1] = e2`, graded (1, 1, 2).
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::new("heisenberg3", 3, [((0, 1), SparseVec::unit(2))])
        .and_then(|l| l.with_grading(vec![1, 1, 2]))
        .expect("static fixture")
}

/// `[e0, e1] = [e2, e3] = e4`, graded (1, 1, 1, 1, 2).
pub fn heisenberg5() -> LieAlgebra {
    LieAlgebra::new(
        "heisenberg5",
        5,
        [((0, 1), SparseVec::unit(4)), ((2, 3), SparseVec::unit(4))],
    )
    .and_then(|l| l.with_grading(vec![1, 1, 1, 1, 2]))
    .expect("static fixture")
}

/// `[e0, e1] = e2`, `[e0, e2] = e3`, graded (1, 1, 2, 3).
pub fn filiform4() -> LieAlgebra {
    LieAlgebra::new(
        "filiform4",
        4,
        [((0, 1), SparseVec::unit(2)), ((0, 2), SparseVec::unit(3))],
    )
    .and_then(|l| l.with_grading(vec![1, 1, 2, 3]))
    .expect("static fixture")
}

/// `[e0, e1] = e1`: solvable, not nilpotent.
pub fn solvable2() -> LieAlgebra {
    LieAlgebra::new("solvable2", 2, [((0, 1), SparseVec::unit(1))]).expect("static fixture")
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n)
        .with_grading(vec![1; n])
        .expect("abelian grading")
}

/// Strictly upper triangular 3x3 representation of `heisenberg3`:
/// `e0 ↦ E12`, `e1 ↦ E23`, `e2 ↦ E13`.
pub fn heisenberg3_standard() -> Representation {
    let e = |r: usize, c: usize| {
        RationalMatrix::from_entries(3, 3, [(r, c, crate::linalg::rational::one())]).expect("in range")
    };
    Representation::new(heisenberg3(), 3, vec![e(0, 1), e(1, 2), e(0, 2)]).expect("static fixture")
}

pub const EXAMPLE_NAMES: [&str; 6] = [
    "abelian{n}",
    "heisenberg3",
    "heisenberg5",
    "filiform4",
    "free{r}_{c}",
    "solvable2",
];

/// Looks up a named example: `abelianN`, `heisenberg3`, `heisenberg5`, `filiform4`,
/// `freeR_C` or `solvable2`.
pub fn by_name(name: &str) -> Result<LieAlgebra> {
    let unknown = || AdoError::UnknownExample(name.to_string());
    match name {
        "heisenberg3" => Ok(heisenberg3()),
        "heisenberg5" => Ok(heisenberg5()),
        "filiform4" => Ok(filiform4()),
        "solvable2" => Ok(solvable2()),
        _ => {
            if let Some(n) = name.strip_prefix("abelian") {
                let n: usize = n.parse().map_err(|_| unknown())?;
                Ok(abelian(n).renamed(name))
            } else if let Some(rc) = name.strip_prefix("free") {
                let (r, c) = rc.split_once('_').ok_or_else(unknown)?;
                let r: usize = r.parse().map_err(|_| unknown())?;
                let c: usize = c.parse().map_err(|_| unknown())?;
                if r == 0 || c == 0 {
                    return Err(unknown());
                }
                free::free_nilpotent(r, c, DEFAULT_FREE_BUDGET)
            } else {
                Err(unknown())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_lookup() {
        assert_eq!(by_name("abelian3").unwrap().dim(), 3);
        assert_eq!(by_name("free2_3").unwrap().dim(), 5);
        assert_eq!(by_name("heisenberg5").unwrap().dim(), 5);
        assert!(matches!(by_name("free2"), Err(AdoError::UnknownExample(_))));
        assert!(matches!(by_name("sl2"), Err(AdoError::UnknownExample(_))));
    }

    #[test]
    fn fixtures_are_lie_algebras() {
        for l in [heisenberg3(), heisenberg5(), filiform4(), solvable2(), abelian(3)] {
            assert!(l.validate().is_empty(), "{}", l.name());
        }
    }
}
