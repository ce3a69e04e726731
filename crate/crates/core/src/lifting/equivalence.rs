//! Equivalences detected by thin fillers.
//!
//! Orientation of 1-equivalences: an edge `f : a → b` is a 1-equivalence
//! when there are thin 2-simplices
//!
//! * `α` with `∂₀α = f` and `∂₁α = s₀b` (filling a `Λ²[2]` horn: a section of `f`), and
//! * `β` with `∂₂β = f` and `∂₁β = s₀a` (filling a `Λ⁰[2]` horn: a retraction of `f`).

use std::collections::HashSet;
use std::sync::Arc;

use super::engine::{characteristic_map, Engine};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::shapes;
use crate::simplicial::{ComplexMap, Inclusion, SimplexId, SimplexRef, StratifiedComplex};

/// Thin 2-simplices by boundary, precomputed once per complex.
struct ThinTriangles {
    sections: HashSet<SimplexRef>,
    retractions: HashSet<SimplexRef>,
}

impl ThinTriangles {
    fn new(a: &StratifiedComplex) -> Self {
        let mut sections = HashSet::new();
        let mut retractions = HashSet::new();
        for t in a.simplices(2) {
            if !a.is_thin(&t) {
                continue;
            }
            let d0 = a.face_unchecked(&t, 0);
            let d1 = a.face_unchecked(&t, 1);
            let d2 = a.face_unchecked(&t, 2);
            let is_constant_edge = |e: &SimplexRef| e.is_degenerate();
            if is_constant_edge(&d1) {
                // d1 = s0(v): α-shape when v is the target of d0, β-shape when it is the source of d2
                sections.insert(d0);
                retractions.insert(d2);
            }
        }
        ThinTriangles {
            sections,
            retractions,
        }
    }

    fn is_equivalence(&self, f: &SimplexRef) -> bool {
        self.sections.contains(f) && self.retractions.contains(f)
    }
}

/// Whether the edge `f` (degenerate or not) is a 1-equivalence.
pub fn is_1_equivalence(a: &StratifiedComplex, f: &SimplexRef) -> bool {
    f.is_degenerate() || ThinTriangles::new(a).is_equivalence(f)
}

/// The nondegenerate edges that are 1-equivalences; degenerate edges always are.
pub fn detect_1_equivalences(a: &StratifiedComplex) -> Vec<SimplexId> {
    let thin = ThinTriangles::new(a);
    a.ids(1)
        .filter(|&id| thin.is_equivalence(&SimplexRef::nondegenerate(id)))
        .collect()
}

/// Vertices of `Δ[n]` inside `Δ[3]_eq ⋆ Δ[n-2]`: the edge `12` of the first
/// block followed by the whole second block.
fn equivalence_vertices(n: usize) -> Vec<usize> {
    [1, 2].into_iter().chain(4..=n + 2).collect()
}

/// `Δ[n] ↪ Δ[3]_eq ⋆ Δ[n-2]` along [`equivalence_vertices`].
pub fn equivalence_inclusion(n: usize) -> Result<Inclusion> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "equivalences are defined for n >= 1".to_string(),
        ));
    }
    let verts = equivalence_vertices(n);
    let total = n + 2;
    let domain = Arc::new(shapes::standard(n));
    let codomain = Arc::new(shapes::saturation_simplex(-1, n as isize - 2, false)?);
    let mut assignment = Vec::new();
    for d in 0..=n {
        let mut row = Vec::new();
        for id in domain.ids(d) {
            let image: Vec<usize> = domain
                .label(id)
                .chars()
                .map(|c| verts[c.to_digit(10).expect("small shape") as usize])
                .collect();
            row.push(codomain.simplex(&shapes::face_label(&image, total))?);
        }
        assignment.push(row);
    }
    Inclusion::new(ComplexMap::new(domain, codomain, assignment)?)
}

/// The `n`-simplices of an `n`-trivial complex that extend along
/// `Δ[n] ↪ Δ[3]_eq ⋆ Δ[n-2]`; degenerate `n`-simplices always do.
pub fn detect_n_equivalences(
    a: &Arc<StratifiedComplex>,
    n: usize,
    budget: &mut Budget,
) -> Result<Vec<SimplexId>> {
    if !crate::simplicial::is_n_trivial(a, n) {
        return Err(Error::Precondition(format!(
            "{n}-equivalences are only defined in {n}-trivial complexes"
        )));
    }
    let inclusion = equivalence_inclusion(n)?;
    let mut engine = Engine::new(a.clone());
    let mut out = Vec::new();
    for id in a.ids(n) {
        let attempt = characteristic_map(a, &SimplexRef::nondegenerate(id))?
            .retarget(inclusion.domain().clone(), a.clone())?;
        if !engine.extensions(&inclusion, &attempt, 1, budget)?.is_empty() {
            out.push(id);
        }
    }
    Ok(out)
}

/// Whether an arbitrary `n`-simplex extends along [`equivalence_inclusion`].
pub fn is_n_equivalence(
    a: &Arc<StratifiedComplex>,
    s: &SimplexRef,
    budget: &mut Budget,
) -> Result<bool> {
    let inclusion = equivalence_inclusion(s.dim())?;
    let attempt = characteristic_map(a, s)?.retarget(inclusion.domain().clone(), a.clone())?;
    Ok(!Engine::new(a.clone())
        .extensions(&inclusion, &attempt, 1, budget)?
        .is_empty())
}

/// A 2-simplex together with its companions whose first and last edges are degenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation {
    pub alpha: SimplexRef,
    /// Thin filler of the horn `(∂₂α, ∂₀α)`.
    pub composite: SimplexRef,
    /// Companion with degenerate first edge.
    pub hat: SimplexRef,
    /// Companion with degenerate last edge.
    pub check: SimplexRef,
    /// Thinness is constant across `alpha`, `hat` and `check`.
    pub linked: bool,
}

fn faces_of(a: &StratifiedComplex, s: &SimplexRef) -> Vec<SimplexRef> {
    (0..=s.dim()).map(|i| a.face_unchecked(s, i)).collect()
}

/// First thin simplex of dimension `dim` whose faces match `pattern` where given.
fn first_thin_filler(
    a: &StratifiedComplex,
    dim: usize,
    pattern: &[Option<&SimplexRef>],
) -> Option<SimplexRef> {
    a.simplices(dim).into_iter().find(|s| {
        a.is_thin(s)
            && pattern
                .iter()
                .enumerate()
                .all(|(i, want)| want.is_none_or(|w| a.face_unchecked(s, i) == *w))
    })
}

/// Translates a 2-simplex `α` into companions `α̂` (via a thin filler of a
/// `Λ²[3]` horn) and `α̌` (via a thin filler of a `Λ¹[3]` horn).
pub fn translate_2_simplex(a: &StratifiedComplex, alpha: &SimplexRef) -> Result<Translation> {
    if alpha.dim() != 2 {
        return Err(Error::InvalidParameters(format!(
            "expected a 2-simplex, got dimension {}",
            alpha.dim()
        )));
    }
    let missing = |what: &str| Error::Precondition(format!("no thin filler for the {what} horn"));
    let [g, _h, f]: [SimplexRef; 3] = faces_of(a, alpha).try_into().expect("three faces");
    let beta = first_thin_filler(a, 2, &[Some(&g), None, Some(&f)]).ok_or_else(|| missing("composite"))?;
    let sf = a.degeneracy(&f, 0)?;
    let upper = first_thin_filler(a, 3, &[Some(&beta), Some(alpha), None, Some(&sf)])
        .ok_or_else(|| missing("Λ²[3]"))?;
    let hat = a.face_unchecked(&upper, 2);
    let sg = a.degeneracy(&g, 1)?;
    let lower = first_thin_filler(a, 3, &[Some(&sg), None, Some(alpha), Some(&beta)])
        .ok_or_else(|| missing("Λ¹[3]"))?;
    let check = a.face_unchecked(&lower, 1);
    let t = a.is_thin(alpha);
    let linked = a.is_thin(&hat) == t && a.is_thin(&check) == t;
    Ok(Translation {
        alpha: alpha.clone(),
        composite: beta,
        hat,
        check,
        linked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_edges_are_equivalences() {
        let a = shapes::standard(2);
        for v in a.simplices(0) {
            assert!(is_1_equivalence(&a, &a.degeneracy(&v, 0).unwrap()));
        }
        assert!(detect_1_equivalences(&a).is_empty());
    }

    #[test]
    fn equivalence_inclusion_is_regular() {
        for n in 1..=4 {
            let inc = equivalence_inclusion(n).unwrap();
            assert!(inc.is_regular());
            assert_eq!(inc.codomain().dimension(), Some(n + 2));
        }
        let one = equivalence_inclusion(1).unwrap();
        assert_eq!(one.map().describe()[2], ("01".to_string(), "12".to_string()));
    }

    #[test]
    fn n_equivalences_require_triviality() {
        let a = Arc::new(shapes::standard(2));
        assert!(matches!(
            detect_n_equivalences(&a, 1, &mut Budget::unlimited()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn translation_in_a_sharp_simplex() {
        let a = shapes::standard(2).sharp().with_bound(3).unwrap();
        let alpha = a.simplex("012").unwrap();
        let t = translate_2_simplex(&a, &alpha).unwrap();
        assert!(t.linked);
        assert_eq!(a.describe(&t.hat), "s0(02)");
        assert_eq!(a.describe(&t.check), "s1(02)");
    }
}
