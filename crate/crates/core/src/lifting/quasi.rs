//! Homotopy categories of quasi-categories.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::checks::is_quasicategory;
use crate::budget::Budget;
use crate::category::{FiniteCategory, Morphism};
use crate::error::{Error, Result};
use crate::simplicial::{SimplexRef, StratifiedComplex};

/// Where the degenerate edge sits in a 2-simplex witnessing `f ~ g`.
///
/// Writing a witness's faces as `(∂₀, ∂₁, ∂₂)`:
/// `(s₀y, g, f)`, `(s₀y, f, g)`, `(g, f, s₀x)`, `(f, g, s₀x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationVariant {
    TrailingIdentityFirst,
    TrailingIdentitySecond,
    LeadingIdentityFirst,
    LeadingIdentitySecond,
}

impl RelationVariant {
    pub const ALL: [RelationVariant; 4] = [
        RelationVariant::TrailingIdentityFirst,
        RelationVariant::TrailingIdentitySecond,
        RelationVariant::LeadingIdentityFirst,
        RelationVariant::LeadingIdentitySecond,
    ];

    /// The pair `(f, g)` related by a 2-simplex with faces `(d0, d1, d2)`, if it has this shape.
    fn related(self, d0: &SimplexRef, d1: &SimplexRef, d2: &SimplexRef) -> Option<(SimplexRef, SimplexRef)> {
        use RelationVariant::*;
        match self {
            TrailingIdentityFirst if d0.is_degenerate() && d0.dim() == 1 => Some((d2.clone(), d1.clone())),
            TrailingIdentitySecond if d0.is_degenerate() => Some((d1.clone(), d2.clone())),
            LeadingIdentityFirst if d2.is_degenerate() => Some((d1.clone(), d0.clone())),
            LeadingIdentitySecond if d2.is_degenerate() => Some((d0.clone(), d1.clone())),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomotopyCategory {
    pub category: FiniteCategory,
    /// Edges in each morphism class, in the category's morphism order.
    pub classes: Vec<Vec<SimplexRef>>,
    /// Whether the raw witness relation was already an equivalence relation.
    pub relation_was_equivalence: bool,
}

impl HomotopyCategory {
    pub fn class_of(&self, edge: &SimplexRef) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(edge))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// The homotopy category, using the given relation variant.
pub fn homotopy_category_with(
    x: &Arc<StratifiedComplex>,
    variant: RelationVariant,
    bound: usize,
    budget: &mut Budget,
) -> Result<HomotopyCategory> {
    let qc = is_quasicategory(x, bound.max(2), budget)?;
    if !qc.passed() {
        return Err(Error::Precondition(format!(
            "not a quasi-category up to dimension {}",
            bound.max(2)
        )));
    }
    let edges = x.simplices(1);
    let position: HashMap<SimplexRef, usize> =
        edges.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let triangles: Vec<[SimplexRef; 3]> = x
        .simplices(2)
        .into_iter()
        .map(|t| {
            [
                x.face_unchecked(&t, 0),
                x.face_unchecked(&t, 1),
                x.face_unchecked(&t, 2),
            ]
        })
        .collect();

    let n = edges.len();
    let mut raw = vec![vec![false; n]; n];
    for [d0, d1, d2] in &triangles {
        if let Some((f, g)) = variant.related(d0, d1, d2) {
            raw[position[&f]][position[&g]] = true;
        }
    }
    let reflexive = (0..n).all(|i| raw[i][i]);
    let symmetric = (0..n).all(|i| (0..n).all(|j| raw[i][j] == raw[j][i]));
    let transitive = (0..n).all(|i| {
        (0..n).all(|j| !raw[i][j] || (0..n).all(|k| !raw[j][k] || raw[i][k]))
    });
    let mut uf = UnionFind((0..n).collect());
    for i in 0..n {
        for j in 0..n {
            if raw[i][j] {
                uf.union(i, j);
            }
        }
    }

    // classes in order of their first edge
    let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut class_of = vec![0; n];
    let mut classes: Vec<Vec<SimplexRef>> = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        let c = *class_of_root.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[i] = c;
        classes[c].push(edges[i].clone());
    }

    let objects: Vec<String> = x.ids(0).map(|v| x.label(v).to_string()).collect();
    let endpoints = |e: &SimplexRef| {
        (
            x.face_unchecked(e, 1).target().index,
            x.face_unchecked(e, 0).target().index,
        )
    };
    let mut morphisms = Vec::new();
    for class in &classes {
        let rep = class
            .iter()
            .find(|e| e.is_degenerate())
            .unwrap_or(&class[0]);
        let (s, t) = endpoints(rep);
        morphisms.push(Morphism {
            label: x.describe(rep),
            source: s,
            target: t,
        });
    }
    let identity: Vec<usize> = x
        .simplices(0)
        .iter()
        .map(|v| class_of[position[&x.degeneracy(v, 0).expect("vertex degeneracy")]])
        .collect();

    // g ∘ f from every 2-simplex with ∂₂ = f and ∂₀ = g; all choices must agree
    let mut compose: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for [d0, d1, d2] in &triangles {
        let (f, g, h) = (class_of[position[d2]], class_of[position[d0]], class_of[position[d1]]);
        if let Some(&prev) = compose.get(&(g, f)) {
            if prev != h {
                return Err(Error::Precondition(format!(
                    "composition of [{}] and [{}] is not well defined",
                    morphisms[g].label, morphisms[f].label
                )));
            }
        } else {
            compose.insert((g, f), h);
        }
    }
    let category = FiniteCategory::new(objects, morphisms, identity, compose)?;
    Ok(HomotopyCategory {
        category,
        classes,
        relation_was_equivalence: reflexive && symmetric && transitive,
    })
}

/// The homotopy category using the first relation variant.
pub fn homotopy_category(
    x: &Arc<StratifiedComplex>,
    bound: usize,
    budget: &mut Budget,
) -> Result<HomotopyCategory> {
    homotopy_category_with(x, RelationVariant::TrailingIdentityFirst, bound, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn point_has_terminal_homotopy_category() {
        let p = Arc::new(shapes::standard(0).with_bound(3).unwrap());
        let h = homotopy_category(&p, 3, &mut Budget::unlimited()).unwrap();
        assert_eq!(h.category.objects().len(), 1);
        assert_eq!(h.category.morphisms().len(), 1);
        assert!(h.relation_was_equivalence);
    }

    #[test]
    fn simplex_gives_its_poset() {
        let d2 = Arc::new(shapes::standard(2).with_bound(3).unwrap());
        let poset = FiniteCategory::from_labels(
            &["0", "1", "2"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "0", "2")],
            &[("b", "a", "c")],
        )
        .unwrap();
        for v in RelationVariant::ALL {
            let h = homotopy_category_with(&d2, v, 3, &mut Budget::unlimited()).unwrap();
            assert!(h.category.is_isomorphic(&poset));
            assert!(h.relation_was_equivalence);
        }
    }

    #[test]
    fn refuses_non_quasicategories() {
        let horn = Arc::new(shapes::horn(2, 1).unwrap());
        assert!(matches!(
            homotopy_category(&horn, 2, &mut Budget::unlimited()),
            Err(Error::Precondition(_))
        ));
    }
}
