//! `n`-trivialization and `n`-core.

use std::sync::Arc;

use super::complex::{SimplexId, StratifiedComplex};
use super::map::{sub_complex, Inclusion};
use crate::error::Result;

/// Marks every simplex above dimension `n`.
pub fn trivialize(x: &StratifiedComplex, n: usize) -> StratifiedComplex {
    x.clone()
        .with_marking(|id, c| id.dim > n || c.is_marked(id))
}

/// All simplices above dimension `n` are thin.
pub fn is_n_trivial(x: &StratifiedComplex, n: usize) -> bool {
    x.all_ids().all(|id| id.dim <= n || x.is_marked(id))
}

/// Simplices of `x` all of whose faces (itself included) above dimension `n` are thin.
pub fn core_members(x: &StratifiedComplex, n: usize) -> Vec<Vec<bool>> {
    let mut ok: Vec<Vec<bool>> = (0..=x.bound()).map(|d| vec![false; x.count(d)]).collect();
    for id in x.all_ids() {
        let here = id.dim <= n || x.is_marked(id);
        let faces_ok = x
            .faces(id)
            .iter()
            .all(|f| ok[f.target().dim][f.target().index]);
        ok[id.dim][id.index] = here && faces_ok;
    }
    ok
}

/// The largest subcomplex whose simplices above dimension `n` are all thin.
pub fn core(x: &StratifiedComplex, n: usize) -> StratifiedComplex {
    let ok = core_members(x, n);
    let keep = |id: SimplexId| ok[id.dim][id.index];
    sub_complex(x, &keep, &|_| true).expect("the core is closed under faces")
}

/// The regular inclusion `core_n x ↪ x`.
pub fn core_inclusion(x: Arc<StratifiedComplex>, n: usize) -> Result<Inclusion> {
    let ok = core_members(&x, n);
    Inclusion::subcomplex(x, |id| ok[id.dim][id.index], |_| true)
}

/// The entire inclusion `x ↪ tr_n x`.
pub fn trivialization_inclusion(x: Arc<StratifiedComplex>, n: usize) -> Result<Inclusion> {
    let t = Arc::new(trivialize(&x, n));
    Inclusion::by_labels(x, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;
    use crate::simplicial::InclusionKind;

    #[test]
    fn trivializing_flat_interval_gives_sharp() {
        let d1 = shapes::standard(1);
        assert_eq!(trivialize(&d1, 0), d1.sharp());
    }

    #[test]
    fn core_drops_nonthin_edge() {
        let d1 = shapes::standard(1);
        let c = core(&d1, 0);
        assert_eq!(c.counts(), vec![2, 0]);
    }

    #[test]
    fn fixed_points_agree() {
        let shapes = [
            shapes::standard(2),
            shapes::standard(2).sharp(),
            shapes::delta3_eq(),
            shapes::admissible(3, 1).unwrap(),
        ];
        for x in &shapes {
            for n in 0..4 {
                let trivial = is_n_trivial(x, n);
                assert_eq!(trivial, trivialize(x, n) == *x);
                assert_eq!(trivial, core(x, n) == *x);
            }
        }
        assert!(is_n_trivial(&shapes::delta3_eq(), 1));
    }

    #[test]
    fn inclusion_kinds() {
        let x = Arc::new(shapes::admissible(3, 2).unwrap());
        assert!(trivialization_inclusion(x.clone(), 1).unwrap().is_entire());
        assert_eq!(core_inclusion(x, 1).unwrap().kind(), InclusionKind::Regular);
    }
}
