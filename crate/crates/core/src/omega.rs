//! Finite strict ω-categories in single-sorted form.
//!
//! One set of elements carries, for each level `n < bound`, source and target
//! maps `s_n`, `t_n` and a partial composition `a ∗_n b`, defined exactly when
//! `s_n(a) = t_n(b)`. Composition is written in the classical order: `a ∗_n b`
//! is "`a` after `b`". Levels at or above the bound are discrete.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::FiniteCategory;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Level {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// `(a, b) ↦ a ∗ b`.
    pub compose: BTreeMap<(usize, usize), usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// A table refers to an element that does not exist, or has the wrong length.
    Range,
    /// Sources and targets are their own sources and targets.
    BoundaryIdempotent,
    /// A composite is defined exactly on compatible pairs.
    CompositeDomain,
    /// `s(a ∗ b) = s(b)` and `t(a ∗ b) = t(a)`.
    CompositeBoundary,
    Unit,
    Associativity,
    /// Sources and targets at different levels are compatible.
    Globularity,
    /// Higher boundaries of a lower composite are the composites of the boundaries.
    BoundaryOfComposite,
    Interchange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaViolation {
    pub axiom: Axiom,
    pub level: usize,
    pub detail: String,
}

impl fmt::Display for OmegaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} at level {}: {}", self.axiom, self.level, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCat {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    levels: Vec<Level>,
}

impl OmegaCat {
    /// Wraps raw tables without checking the axioms.
    pub fn from_tables(labels: Vec<String>, levels: Vec<Level>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidOmegaCat(format!("duplicate element `{l}`")));
            }
        }
        Ok(OmegaCat {
            labels,
            index,
            levels,
        })
    }

    /// As [`OmegaCat::from_tables`], rejecting tables that violate an axiom.
    pub fn new(labels: Vec<String>, levels: Vec<Level>) -> Result<Self> {
        let c = Self::from_tables(labels, levels)?;
        c.validated()
    }

    pub fn validated(self) -> Result<Self> {
        match self.validate().first() {
            None => Ok(self),
            Some(v) => Err(Error::InvalidOmegaCat(v.to_string())),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of non-discrete levels stored.
    pub fn level_bound(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn element_or_err(&self, label: &str) -> Result<usize> {
        self.element(label)
            .ok_or_else(|| Error::InvalidOmegaCat(format!("unknown element `{label}`")))
    }

    pub fn source(&self, n: usize, x: usize) -> usize {
        self.levels.get(n).map_or(x, |l| l.source[x])
    }

    pub fn target(&self, n: usize, x: usize) -> usize {
        self.levels.get(n).map_or(x, |l| l.target[x])
    }

    /// `a ∗_n b`, when `s_n(a) = t_n(b)`.
    pub fn compose(&self, n: usize, a: usize, b: usize) -> Option<usize> {
        match self.levels.get(n) {
            Some(l) => l.compose.get(&(a, b)).copied(),
            None => (a == b).then_some(a),
        }
    }

    pub fn try_compose(&self, n: usize, a: usize, b: usize) -> Result<usize> {
        self.compose(n, a, b).ok_or_else(|| {
            Error::Undefined(format!(
                "{} ∗{n} {} is not defined",
                self.labels[a], self.labels[b]
            ))
        })
    }

    /// Least `n` with `s_n(x) = x`.
    pub fn cell_dimension(&self, x: usize) -> usize {
        (0..=self.levels.len())
            .find(|&n| self.source(n, x) == x)
            .expect("levels at the bound are discrete")
    }

    pub fn cells_of_dimension(&self, n: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.cell_dimension(x) == n).collect()
    }

    /// Every element is an `n`-cell.
    pub fn is_n_category(&self, n: usize) -> bool {
        (0..self.len()).all(|x| self.cell_dimension(x) <= n)
    }

    /// Largest cell dimension.
    pub fn dimension(&self) -> usize {
        (0..self.len()).map(|x| self.cell_dimension(x)).max().unwrap_or(0)
    }

    /// Every axiom violation, found by exhaustive checking.
    pub fn validate(&self) -> Vec<OmegaViolation> {
        let mut out = Vec::new();
        let size = self.len();
        for (n, l) in self.levels.iter().enumerate() {
            let in_range = l.source.len() == size
                && l.target.len() == size
                && l.source.iter().chain(&l.target).all(|&x| x < size)
                && l.compose.iter().all(|(&(a, b), &c)| a < size && b < size && c < size);
            if !in_range {
                out.push(OmegaViolation {
                    axiom: Axiom::Range,
                    level: n,
                    detail: "table refers to unknown elements".to_string(),
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for n in 0..self.levels.len() {
            self.validate_category(n, &mut out);
        }
        for n in 1..self.levels.len() {
            for m in 0..n {
                self.validate_pair(m, n, &mut out);
            }
        }
        out
    }

    fn validate_category(&self, n: usize, out: &mut Vec<OmegaViolation>) {
        let lab = |x: usize| self.labels[x].as_str();
        let mut push = |axiom, detail: String| {
            out.push(OmegaViolation {
                axiom,
                level: n,
                detail,
            })
        };
        let (s, t) = (|x| self.source(n, x), |x| self.target(n, x));
        for x in 0..self.len() {
            for y in [s(x), t(x)] {
                if s(y) != y || t(y) != y {
                    push(Axiom::BoundaryIdempotent, format!("boundary {} of {}", lab(y), lab(x)));
                }
            }
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                let compatible = s(a) == t(b);
                match (compatible, self.compose(n, a, b)) {
                    (true, None) => push(
                        Axiom::CompositeDomain,
                        format!("{} ∗ {} is missing", lab(a), lab(b)),
                    ),
                    (false, Some(_)) => push(
                        Axiom::CompositeDomain,
                        format!("{} ∗ {} is defined on an incompatible pair", lab(a), lab(b)),
                    ),
                    (true, Some(c)) => {
                        if s(c) != s(b) || t(c) != t(a) {
                            push(
                                Axiom::CompositeBoundary,
                                format!("{} = {} ∗ {}", lab(c), lab(a), lab(b)),
                            );
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for a in 0..self.len() {
            if self.compose(n, a, s(a)) != Some(a) || self.compose(n, t(a), a) != Some(a) {
                push(Axiom::Unit, format!("at {}", lab(a)));
            }
        }
        let Some(level) = self.levels.get(n) else { return };
        for (&(a, b), &ab) in &level.compose {
            for c in 0..self.len() {
                let Some(bc) = self.compose(n, b, c) else { continue };
                let left = self.compose(n, ab, c);
                let right = self.compose(n, a, bc);
                if left.is_none() || left != right {
                    push(
                        Axiom::Associativity,
                        format!("({} ∗ {}) ∗ {}", lab(a), lab(b), lab(c)),
                    );
                }
            }
        }
    }

    fn validate_pair(&self, m: usize, n: usize, out: &mut Vec<OmegaViolation>) {
        let lab = |x: usize| self.labels[x].as_str();
        let mut push = |axiom, detail: String| {
            out.push(OmegaViolation {
                axiom,
                level: m,
                detail,
            })
        };
        for x in 0..self.len() {
            let (sm, tm) = (self.source(m, x), self.target(m, x));
            let (sn, tn) = (self.source(n, x), self.target(n, x));
            let ok = self.source(m, sn) == sm
                && self.source(m, tn) == sm
                && self.target(m, sn) == tm
                && self.target(m, tn) == tm
                && self.source(n, sm) == sm
                && self.target(n, sm) == sm
                && self.source(n, tm) == tm
                && self.target(n, tm) == tm;
            if !ok {
                push(Axiom::Globularity, format!("{} between levels {m} and {n}", lab(x)));
            }
        }
        let level = &self.levels[m];
        for (&(a, b), &ab) in &level.compose {
            for (name, f) in [
                ("source", Self::source as fn(&Self, usize, usize) -> usize),
                ("target", Self::target),
            ] {
                let want = self.compose(m, f(self, n, a), f(self, n, b));
                if want != Some(f(self, n, ab)) {
                    push(
                        Axiom::BoundaryOfComposite,
                        format!("{name} at level {n} of {} ∗{m} {}", lab(a), lab(b)),
                    );
                }
            }
        }
        // (a ∗n b) ∗m (c ∗n d) = (a ∗m c) ∗n (b ∗m d)
        let upper = &self.levels[n];
        for (&(a, b), &ab) in &upper.compose {
            for (&(c, d), &cd) in &upper.compose {
                let Some(left) = self.compose(m, ab, cd) else { continue };
                let right = self
                    .compose(m, a, c)
                    .zip(self.compose(m, b, d))
                    .and_then(|(ac, bd)| self.compose(n, ac, bd));
                if right != Some(left) {
                    push(
                        Axiom::Interchange,
                        format!(
                            "({} ∗{n} {}) ∗{m} ({} ∗{n} {})",
                            lab(a),
                            lab(b),
                            lab(c),
                            lab(d)
                        ),
                    );
                }
            }
        }
    }

    /// Elements with a two-sided `∗_n`-inverse.
    pub fn invertible(&self, n: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&f| self.inverse(n, f).is_some())
            .collect()
    }

    pub fn inverse(&self, n: usize, f: usize) -> Option<usize> {
        let (s, t) = (self.source(n, f), self.target(n, f));
        (0..self.len()).find(|&g| self.compose(n, g, f) == Some(s) && self.compose(n, f, g) == Some(t))
    }

    /// The isomorphisms of a 1-category, identities included.
    pub fn detect_isos_1(&self) -> Result<Vec<usize>> {
        if !self.is_n_category(1) {
            return Err(Error::Precondition("not a 1-category".to_string()));
        }
        Ok(self.invertible(0))
    }

    /// The invertible 2-cells and the 1-cell equivalences of a 2-category;
    /// lower-dimensional cells count as identities in both lists.
    pub fn detect_equivalences_2(&self) -> Result<Equivalences2> {
        if !self.is_n_category(2) {
            return Err(Error::Precondition("not a 2-category".to_string()));
        }
        let isos: BTreeSet<usize> = self.invertible(1).into_iter().collect();
        let connected = |u: usize, v: usize| {
            isos.iter()
                .any(|&a| self.source(1, a) == u && self.target(1, a) == v)
        };
        let equivalences = (0..self.len())
            .filter(|&f| self.cell_dimension(f) <= 1)
            .filter(|&f| {
                let (x, y) = (self.source(0, f), self.target(0, f));
                (0..self.len()).any(|g| {
                    self.cell_dimension(g) <= 1
                        && self.source(0, g) == y
                        && self.target(0, g) == x
                        && self.compose(0, g, f).is_some_and(|gf| connected(gf, x))
                        && self.compose(0, f, g).is_some_and(|fg| connected(fg, y))
                })
            })
            .collect();
        Ok(Equivalences2 {
            invertible_2_cells: isos.into_iter().collect(),
            equivalences,
        })
    }

    /// The 1-category with one 0-cell per object and one 1-cell per non-identity morphism.
    pub fn from_category(c: &FiniteCategory) -> Result<Self> {
        let objects = c.objects().len();
        let mut element_of = vec![0; c.morphisms().len()];
        let mut labels: Vec<String> = c.objects().to_vec();
        for x in 0..objects {
            element_of[c.identity(x)] = x;
        }
        for (f, m) in c.morphisms().iter().enumerate() {
            if !c.is_identity(f) {
                element_of[f] = labels.len();
                labels.push(m.label.clone());
            }
        }
        let size = labels.len();
        let mut level = Level {
            source: (0..size).collect(),
            target: (0..size).collect(),
            compose: BTreeMap::new(),
        };
        for (f, m) in c.morphisms().iter().enumerate() {
            level.source[element_of[f]] = m.source;
            level.target[element_of[f]] = m.target;
        }
        for (&(g, f), &gf) in c.composition_table() {
            level.compose.insert((element_of[g], element_of[f]), element_of[gf]);
        }
        OmegaCat::new(labels, vec![level])
    }

    /// The underlying 1-category of a 1-category.
    pub fn to_category(&self) -> Result<FiniteCategory> {
        if !self.is_n_category(1) {
            return Err(Error::Precondition("not a 1-category".to_string()));
        }
        let objects = self.cells_of_dimension(0);
        let position = |x: usize| objects.iter().position(|&o| o == x).expect("object");
        let morphisms: Vec<crate::category::Morphism> = (0..self.len())
            .map(|x| crate::category::Morphism {
                label: self.labels[x].clone(),
                source: position(self.source(0, x)),
                target: position(self.target(0, x)),
            })
            .collect();
        let mut compose = BTreeMap::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if let Some(c) = self.compose(0, a, b) {
                    compose.insert((a, b), c);
                }
            }
        }
        FiniteCategory::new(
            objects.iter().map(|&o| self.labels[o].clone()).collect(),
            morphisms,
            objects.clone(),
            compose,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalences2 {
    pub invertible_2_cells: Vec<usize>,
    pub equivalences: Vec<usize>,
}

/// Builds a table cell by cell; composites with identities are filled in.
#[derive(Clone, Debug)]
pub struct OmegaCatBuilder {
    bound: usize,
    labels: Vec<String>,
    dims: Vec<usize>,
    /// `boundary[x][n] = (s_n x, t_n x)` for `n < dim x`.
    boundary: Vec<Vec<(usize, usize)>>,
    composites: Vec<(usize, usize, usize, usize)>,
}

impl OmegaCatBuilder {
    pub fn new(bound: usize) -> Self {
        OmegaCatBuilder {
            bound,
            labels: Vec::new(),
            dims: Vec::new(),
            boundary: Vec::new(),
            composites: Vec::new(),
        }
    }

    fn find(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidOmegaCat(format!("unknown element `{label}`")))
    }

    /// Adds a 0-cell.
    pub fn object(&mut self, label: &str) -> Result<&mut Self> {
        self.push(label, 0, Vec::new())
    }

    /// Adds a cell one dimension above its (parallel) source and target.
    pub fn cell(&mut self, label: &str, source: &str, target: &str) -> Result<&mut Self> {
        let (a, b) = (self.find(source)?, self.find(target)?);
        let d = self.dims[a];
        if self.dims[b] != d || self.boundary[a] != self.boundary[b] {
            return Err(Error::InvalidOmegaCat(format!(
                "`{source}` and `{target}` are not parallel"
            )));
        }
        let mut boundary = self.boundary[a].clone();
        boundary.push((a, b));
        self.push(label, d + 1, boundary)
    }

    fn push(&mut self, label: &str, dim: usize, boundary: Vec<(usize, usize)>) -> Result<&mut Self> {
        if self.labels.iter().any(|l| l == label) {
            return Err(Error::InvalidOmegaCat(format!("duplicate element `{label}`")));
        }
        if dim > self.bound {
            return Err(Error::InvalidOmegaCat(format!(
                "`{label}` has dimension {dim} above the bound {}",
                self.bound
            )));
        }
        self.labels.push(label.to_string());
        self.dims.push(dim);
        self.boundary.push(boundary);
        Ok(self)
    }

    /// Records `a ∗_n b = c`.
    pub fn compose(&mut self, n: usize, a: &str, b: &str, c: &str) -> Result<&mut Self> {
        let (a, b, c) = (self.find(a)?, self.find(b)?, self.find(c)?);
        if n >= self.bound {
            return Err(Error::InvalidOmegaCat(format!("level {n} is discrete")));
        }
        self.composites.push((n, a, b, c));
        Ok(self)
    }

    /// Validates the assembled tables.
    pub fn build(&self) -> Result<OmegaCat> {
        self.tables()?.validated()
    }

    /// Assembles the tables without validating them.
    pub fn tables(&self) -> Result<OmegaCat> {
        let size = self.labels.len();
        let mut levels = Vec::new();
        for n in 0..self.bound {
            let mut level = Level {
                source: (0..size).collect(),
                target: (0..size).collect(),
                compose: BTreeMap::new(),
            };
            for x in 0..size {
                if let Some(&(s, t)) = self.boundary[x].get(n) {
                    level.source[x] = s;
                    level.target[x] = t;
                }
            }
            for x in 0..size {
                level.compose.insert((x, level.source[x]), x);
                level.compose.insert((level.target[x], x), x);
            }
            levels.push(level);
        }
        for &(n, a, b, c) in &self.composites {
            levels[n].compose.insert((a, b), c);
        }
        OmegaCat::from_tables(self.labels.clone(), levels)
    }
}

/// A map of elements preserving sources, targets and composites at every level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaFunctor {
    domain: Arc<OmegaCat>,
    codomain: Arc<OmegaCat>,
    map: Vec<usize>,
}

impl OmegaFunctor {
    pub fn new(domain: Arc<OmegaCat>, codomain: Arc<OmegaCat>, map: Vec<usize>) -> Result<Self> {
        let f = OmegaFunctor {
            domain,
            codomain,
            map,
        };
        match f.validate().first() {
            None => Ok(f),
            Some(v) => Err(Error::InvalidOmegaCat(v.clone())),
        }
    }

    pub fn identity(c: Arc<OmegaCat>) -> Self {
        let map = (0..c.len()).collect();
        OmegaFunctor {
            domain: c.clone(),
            codomain: c,
            map,
        }
    }

    pub fn domain(&self) -> &Arc<OmegaCat> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<OmegaCat> {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn validate(&self) -> Vec<String> {
        let (c, d) = (&*self.domain, &*self.codomain);
        if self.map.len() != c.len() || self.map.iter().any(|&y| y >= d.len()) {
            return vec!["the element map has the wrong shape".to_string()];
        }
        let f = |x: usize| self.map[x];
        let levels = c.level_bound().max(d.level_bound());
        let mut out = Vec::new();
        for n in 0..levels {
            for x in 0..c.len() {
                if f(c.source(n, x)) != d.source(n, f(x)) || f(c.target(n, x)) != d.target(n, f(x)) {
                    out.push(format!("boundary at level {n} of `{}`", c.label(x)));
                }
            }
            if let Some(level) = c.levels().get(n) {
                for (&(a, b), &ab) in &level.compose {
                    if d.compose(n, f(a), f(b)) != Some(f(ab)) {
                        out.push(format!(
                            "composite {} ∗{n} {}",
                            c.label(a),
                            c.label(b)
                        ));
                    }
                }
            }
        }
        out
    }

    /// `self` followed by `after`.
    pub fn then(&self, after: &OmegaFunctor) -> Result<OmegaFunctor> {
        if *self.codomain != *after.domain {
            return Err(Error::InvalidOmegaCat("functors are not composable".to_string()));
        }
        OmegaFunctor::new(
            self.domain.clone(),
            after.codomain.clone(),
            self.map.iter().map(|&x| after.map[x]).collect(),
        )
    }
}
