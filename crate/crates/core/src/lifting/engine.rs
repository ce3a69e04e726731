//! Backtracking search for stratified maps extending a partial assignment.
//!
//! Free simplices of the domain are visited dimension ascending. Once the
//! faces of a simplex are assigned its boundary in the target is known, so
//! the candidates are exactly the target simplices with that boundary; an
//! index keyed by boundary makes each step a single lookup.

use std::collections::HashMap;
use std::sync::Arc;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::simplicial::{ComplexMap, Inclusion, SimplexId, SimplexRef, StratifiedComplex};

/// All simplices of a target complex, degenerate ones included, keyed by boundary.
#[derive(Debug)]
pub struct TargetIndex {
    complex: Arc<StratifiedComplex>,
    vertices: Vec<SimplexRef>,
    by_boundary: Vec<HashMap<Vec<SimplexRef>, Vec<SimplexRef>>>,
}

impl TargetIndex {
    pub fn new(complex: Arc<StratifiedComplex>, max_dim: usize) -> Self {
        let vertices = complex.simplices(0);
        let mut by_boundary = vec![HashMap::new()];
        for d in 1..=max_dim {
            let mut table: HashMap<Vec<SimplexRef>, Vec<SimplexRef>> = HashMap::new();
            for s in complex.simplices(d) {
                let key: Vec<SimplexRef> = (0..=d).map(|i| complex.face_unchecked(&s, i)).collect();
                table.entry(key).or_default().push(s);
            }
            by_boundary.push(table);
        }
        TargetIndex {
            complex,
            vertices,
            by_boundary,
        }
    }

    pub fn complex(&self) -> &Arc<StratifiedComplex> {
        &self.complex
    }

    pub fn max_dim(&self) -> usize {
        self.by_boundary.len() - 1
    }

    fn ensure(&mut self, dim: usize) {
        if dim > self.max_dim() {
            *self = TargetIndex::new(self.complex.clone(), dim);
        }
    }

    /// Simplices with the given boundary, in stable order.
    pub fn fillers(&self, boundary: &[SimplexRef]) -> &[SimplexRef] {
        if boundary.is_empty() {
            return &self.vertices;
        }
        let d = boundary.len() - 1;
        self.by_boundary
            .get(d)
            .and_then(|t| t.get(boundary))
            .map_or(&[], Vec::as_slice)
    }
}

pub(crate) type Slots = Vec<Vec<Option<SimplexRef>>>;

/// Search state for maps out of one domain complex.
pub(crate) struct Search<'a> {
    domain: &'a StratifiedComplex,
    index: &'a TargetIndex,
    order: Vec<SimplexId>,
    slots: Slots,
}

impl<'a> Search<'a> {
    /// `None` when the preassigned part already violates the domain's marking.
    pub(crate) fn new(domain: &'a StratifiedComplex, index: &'a TargetIndex, slots: Slots) -> Option<Self> {
        let target = index.complex();
        let mut order = Vec::new();
        for id in domain.all_ids() {
            match &slots[id.dim][id.index] {
                Some(img) => {
                    if domain.is_marked(id) && !target.is_thin(img) {
                        return None;
                    }
                }
                None => order.push(id),
            }
        }
        Some(Search {
            domain,
            index,
            order,
            slots,
        })
    }

    fn image(&self, face: &SimplexRef) -> SimplexRef {
        self.slots[face.target().dim][face.target().index]
            .as_ref()
            .expect("faces are assigned before their cofaces")
            .degenerate_by(face.surjection())
    }

    /// Visits complete assignments until `visit` returns `false`.
    /// Returns whether the search ran to completion.
    pub(crate) fn run(
        &mut self,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&Slots) -> bool,
    ) -> Result<bool> {
        self.dfs(0, budget, visit)
    }

    fn dfs(
        &mut self,
        pos: usize,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&Slots) -> bool,
    ) -> Result<bool> {
        let Some(&id) = self.order.get(pos) else {
            return Ok(visit(&self.slots));
        };
        let boundary: Vec<SimplexRef> = self
            .domain
            .faces(id)
            .iter()
            .map(|f| self.image(f))
            .collect();
        let index = self.index;
        let target = index.complex();
        let must_be_thin = self.domain.is_marked(id);
        for candidate in index.fillers(&boundary) {
            budget.tick()?;
            if must_be_thin && !target.is_thin(candidate) {
                continue;
            }
            self.slots[id.dim][id.index] = Some(candidate.clone());
            let go_on = self.dfs(pos + 1, budget, visit)?;
            if !go_on {
                self.slots[id.dim][id.index] = None;
                return Ok(false);
            }
        }
        self.slots[id.dim][id.index] = None;
        Ok(true)
    }
}

pub(crate) fn empty_slots(x: &StratifiedComplex) -> Slots {
    (0..=x.bound()).map(|d| vec![None; x.count(d)]).collect()
}

pub(crate) fn into_assignment(slots: &Slots) -> Vec<Vec<SimplexRef>> {
    slots
        .iter()
        .map(|row| row.iter().map(|s| s.clone().expect("complete assignment")).collect())
        .collect()
}

/// Reusable search context for one target complex.
#[derive(Debug)]
pub struct Engine {
    index: TargetIndex,
}

impl Engine {
    pub fn new(target: Arc<StratifiedComplex>) -> Self {
        Engine {
            index: TargetIndex::new(target, 0),
        }
    }

    pub fn target(&self) -> &Arc<StratifiedComplex> {
        self.index.complex()
    }

    pub fn index_for(&mut self, dim: usize) -> &TargetIndex {
        self.index.ensure(dim);
        &self.index
    }

    /// Calls `visit` on every stratified map `x → target` until it returns `false`.
    pub fn for_each_map(
        &mut self,
        x: &Arc<StratifiedComplex>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(ComplexMap) -> bool,
    ) -> Result<()> {
        self.index.ensure(x.dimension().unwrap_or(0));
        let target = self.index.complex().clone();
        let Some(mut search) = Search::new(x, &self.index, empty_slots(x)) else {
            return Ok(());
        };
        search.run(budget, &mut |slots| {
            visit(ComplexMap::new_unchecked(
                x.clone(),
                target.clone(),
                into_assignment(slots),
            ))
        })?;
        Ok(())
    }

    pub fn maps(&mut self, x: &Arc<StratifiedComplex>, budget: &mut Budget) -> Result<Vec<ComplexMap>> {
        let mut out = Vec::new();
        self.for_each_map(x, budget, &mut |m| {
            out.push(m);
            true
        })?;
        Ok(out)
    }

    /// Up to `limit` extensions of `attempt` along `inclusion`.
    pub fn extensions(
        &mut self,
        inclusion: &Inclusion,
        attempt: &ComplexMap,
        limit: usize,
        budget: &mut Budget,
    ) -> Result<Vec<ComplexMap>> {
        let v = inclusion.codomain();
        self.index.ensure(v.dimension().unwrap_or(0));
        let target = self.index.complex().clone();
        let mut slots = empty_slots(v);
        for id in inclusion.domain().all_ids() {
            let img = inclusion.map().image(id).target();
            slots[img.dim][img.index] = Some(attempt.image(id).clone());
        }
        let mut out = Vec::new();
        if limit == 0 {
            return Ok(out);
        }
        let Some(mut search) = Search::new(v, &self.index, slots) else {
            return Ok(out);
        };
        search.run(budget, &mut |slots| {
            out.push(ComplexMap::new_unchecked(
                v.clone(),
                target.clone(),
                into_assignment(slots),
            ));
            out.len() < limit
        })?;
        Ok(out)
    }
}

/// An inclusion `U ↪ V` together with a map `U → A` to be extended along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingProblem {
    inclusion: Inclusion,
    attempt: ComplexMap,
}

impl LiftingProblem {
    pub fn new(inclusion: Inclusion, attempt: ComplexMap) -> Result<Self> {
        if **attempt.domain() != **inclusion.domain() {
            return Err(Error::InvalidMap(
                "the attempt is not defined on the domain of the inclusion".to_string(),
            ));
        }
        if let Some(v) = attempt.violations().into_iter().next() {
            return Err(Error::InvalidMap(v));
        }
        Ok(LiftingProblem { inclusion, attempt })
    }

    pub fn inclusion(&self) -> &Inclusion {
        &self.inclusion
    }

    pub fn attempt(&self) -> &ComplexMap {
        &self.attempt
    }

    pub fn target(&self) -> &Arc<StratifiedComplex> {
        self.attempt.codomain()
    }

    /// Up to `limit` extensions, in search order.
    pub fn extensions(&self, limit: usize, budget: &mut Budget) -> Result<Vec<ComplexMap>> {
        Engine::new(self.target().clone()).extensions(&self.inclusion, &self.attempt, limit, budget)
    }
}

/// Every stratified map `V → A` restricting to the attempt on `U`.
pub fn enumerate_extensions(problem: &LiftingProblem) -> Result<Vec<ComplexMap>> {
    problem.extensions(usize::MAX, &mut Budget::default())
}

/// Every stratified map `x → a`.
pub fn enumerate_maps(
    x: &Arc<StratifiedComplex>,
    a: &Arc<StratifiedComplex>,
    budget: &mut Budget,
) -> Result<Vec<ComplexMap>> {
    Engine::new(a.clone()).maps(x, budget)
}

/// The map `Δ[n] → a` classifying the `n`-simplex `s` (vertices of `Δ[n]` labeled `0..n`).
pub fn characteristic_map(a: &Arc<StratifiedComplex>, s: &SimplexRef) -> Result<ComplexMap> {
    let n = s.dim();
    let delta = Arc::new(crate::shapes::standard(n));
    let mut assignment = Vec::new();
    for d in 0..=n {
        let mut row = Vec::new();
        for id in delta.ids(d) {
            let verts: Vec<usize> = vertex_list(delta.label(id), n);
            let theta = crate::simplicial::MonotoneMap::new(d, n, verts)?;
            row.push(a.act(s, &theta)?);
        }
        assignment.push(row);
    }
    ComplexMap::new(delta, a.clone(), assignment)
}

fn vertex_list(label: &str, n: usize) -> Vec<usize> {
    if n >= 10 {
        label.split('.').map(|p| p.parse().expect("vertex label")).collect()
    } else {
        label.chars().map(|c| c.to_digit(10).expect("vertex label") as usize).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{self, GeneratorSpec};

    /// Nerve of the poset [2], written by hand: a 2-simplex with a thin top.
    fn poset2_nerve() -> Arc<StratifiedComplex> {
        Arc::new(shapes::thin_top(2).with_bound(4).unwrap())
    }

    #[test]
    fn identity_inclusion_has_only_the_attempt() {
        let a = poset2_nerve();
        let x = Arc::new(shapes::standard(1));
        let inc = Inclusion::by_labels(x.clone(), x.clone()).unwrap();
        let attempt =
            ComplexMap::from_labels(x, a, &[("0", "0"), ("1", "2"), ("01", "02")]).unwrap();
        let p = LiftingProblem::new(inc, attempt.clone()).unwrap();
        assert_eq!(enumerate_extensions(&p).unwrap(), vec![attempt]);
    }

    #[test]
    fn inner_horn_in_poset_nerve_has_unique_filler() {
        let a = poset2_nerve();
        let inc = shapes::make_inclusion(&GeneratorSpec::AdmissibleHorn { n: 2, k: 1 }).unwrap();
        let attempt = ComplexMap::from_labels(
            inc.domain().clone(),
            a.clone(),
            &[("0", "0"), ("1", "1"), ("2", "2"), ("01", "01"), ("12", "12")],
        )
        .unwrap();
        let p = LiftingProblem::new(inc.clone(), attempt).unwrap();
        let ext = enumerate_extensions(&p).unwrap();
        assert_eq!(ext.len(), 1);
        assert_eq!(
            ext[0].describe().last().unwrap(),
            &("012".to_string(), "012".to_string())
        );

        // with the composite triangle unmarked, nothing fills the admissible horn
        let flat = Arc::new(shapes::standard(2).with_bound(4).unwrap());
        let attempt = ComplexMap::from_labels(
            inc.domain().clone(),
            flat,
            &[("0", "0"), ("1", "1"), ("2", "2"), ("01", "01"), ("12", "12")],
        )
        .unwrap();
        let p = LiftingProblem::new(inc, attempt).unwrap();
        assert!(enumerate_extensions(&p).unwrap().is_empty());
    }

    #[test]
    fn map_counts_match_monotone_oracle() {
        // maps Δ[m] → Δ[n] are monotone maps [m] → [n]: C(m + n + 1, m + 1)
        let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        for m in 0..4 {
            for n in 0..4 {
                let x = Arc::new(shapes::standard(m));
                let a = Arc::new(shapes::standard(n));
                let maps = enumerate_maps(&x, &a, &mut Budget::unlimited()).unwrap();
                assert_eq!(maps.len(), binom(m + n + 1, m + 1), "m = {m}, n = {n}");
                assert!(maps.iter().all(|f| f.violations().is_empty()));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let x = Arc::new(shapes::standard(3));
        let a = Arc::new(shapes::standard(3));
        assert!(matches!(
            enumerate_maps(&x, &a, &mut Budget::new(5)),
            Err(Error::BudgetExceeded { limit: 5 })
        ));
    }

    #[test]
    fn characteristic_map_of_degenerate_simplex() {
        let a = Arc::new(shapes::standard(2));
        let s = a.degeneracy(&a.simplex("12").unwrap(), 1).unwrap();
        let chi = characteristic_map(&a, &s).unwrap();
        assert_eq!(chi.describe()[1], ("1".to_string(), "2".to_string()));
        assert_eq!(chi.image(chi.domain().id("012").unwrap()), &s);
    }
}
