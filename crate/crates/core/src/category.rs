//! Finite categories given by explicit composition tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite category; `compose[(g, f)] = g ∘ f` for composable `f : x → y`, `g : y → z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<usize>,
    compose: BTreeMap<(usize, usize), usize>,
}

impl FiniteCategory {
    /// Validates identities, unit laws, associativity, and that composition
    /// is defined exactly on composable pairs.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<usize>,
        compose: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let c = FiniteCategory {
            objects,
            morphisms,
            identity,
            compose,
        };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameters(m));
        let n = self.morphisms.len();
        if self.identity.len() != self.objects.len() {
            return bad("one identity per object is required".into());
        }
        for m in &self.morphisms {
            if m.source >= self.objects.len() || m.target >= self.objects.len() {
                return bad(format!("`{}` has an unknown endpoint", m.label));
            }
        }
        for (x, &i) in self.identity.iter().enumerate() {
            if i >= n || self.morphisms[i].source != x || self.morphisms[i].target != x {
                return bad(format!("identity of `{}` is not an endomorphism", self.objects[x]));
            }
        }
        for g in 0..n {
            for f in 0..n {
                let composable = self.morphisms[f].target == self.morphisms[g].source;
                match (composable, self.compose.get(&(g, f))) {
                    (true, None) => {
                        return bad(format!(
                            "missing composite {} ∘ {}",
                            self.morphisms[g].label, self.morphisms[f].label
                        ))
                    }
                    (false, Some(_)) => {
                        return bad(format!(
                            "composite {} ∘ {} of non-composable pair",
                            self.morphisms[g].label, self.morphisms[f].label
                        ))
                    }
                    (true, Some(&h)) => {
                        let (mh, mf, mg) = (&self.morphisms[h], &self.morphisms[f], &self.morphisms[g]);
                        if mh.source != mf.source || mh.target != mg.target {
                            return bad(format!("composite {} has wrong endpoints", mh.label));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..n {
            let m = &self.morphisms[f];
            if self.compose[&(f, self.identity[m.source])] != f
                || self.compose[&(self.identity[m.target], f)] != f
            {
                return bad(format!("unit law fails at `{}`", m.label));
            }
        }
        for (&(g, f), &gf) in &self.compose {
            for h in 0..n {
                if self.morphisms[g].target != self.morphisms[h].source {
                    continue;
                }
                let left = self.compose[&(h, gf)];
                let right = self.compose[&(self.compose[&(h, g)], f)];
                if left != right {
                    return bad(format!(
                        "associativity fails at ({}, {}, {})",
                        self.morphisms[h].label, self.morphisms[g].label, self.morphisms[f].label
                    ));
                }
            }
        }
        Ok(())
    }

    /// Builds a category from labels; `composites` lists `(g, f, g∘f)` for
    /// every composable pair not involving an identity.
    pub fn from_labels(
        objects: &[&str],
        arrows: &[(&str, &str, &str)],
        composites: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let obj = |name: &str| {
            objects
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| Error::InvalidParameters(format!("unknown object `{name}`")))
        };
        let mut morphisms: Vec<Morphism> = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Morphism {
                label: format!("id_{o}"),
                source: i,
                target: i,
            })
            .collect();
        let identity: Vec<usize> = (0..objects.len()).collect();
        for (label, s, t) in arrows {
            morphisms.push(Morphism {
                label: label.to_string(),
                source: obj(s)?,
                target: obj(t)?,
            });
        }
        let arrow = |name: &str| {
            morphisms
                .iter()
                .position(|m| m.label == name)
                .ok_or_else(|| Error::InvalidParameters(format!("unknown arrow `{name}`")))
        };
        let mut compose = BTreeMap::new();
        for f in 0..morphisms.len() {
            let m = &morphisms[f];
            compose.insert((f, identity[m.source]), f);
            compose.insert((identity[m.target], f), f);
        }
        for (g, f, gf) in composites {
            compose.insert((arrow(g)?, arrow(f)?), arrow(gf)?);
        }
        FiniteCategory::new(objects, morphisms, identity, compose)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.morphisms[f].source] == f
    }

    /// `g ∘ f`, when composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn composition_table(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.compose
    }

    pub fn morphism(&self, label: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.label == label)
    }

    /// Morphisms with a two-sided inverse.
    pub fn isomorphisms(&self) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&f| {
                let m = &self.morphisms[f];
                (0..self.morphisms.len()).any(|g| {
                    self.compose(g, f) == Some(self.identity[m.source])
                        && self.compose(f, g) == Some(self.identity[m.target])
                })
            })
            .collect()
    }

    /// Searches for an isomorphism of categories (bijections on objects and
    /// morphisms preserving endpoints, identities and composition).
    pub fn is_isomorphic(&self, other: &FiniteCategory) -> bool {
        if self.objects.len() != other.objects.len() || self.morphisms.len() != other.morphisms.len() {
            return false;
        }
        let mut objects = vec![None; self.objects.len()];
        let mut used = vec![false; other.objects.len()];
        self.match_objects(other, 0, &mut objects, &mut used)
    }

    fn match_objects(
        &self,
        other: &FiniteCategory,
        x: usize,
        objects: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if x == self.objects.len() {
            let objects: Vec<usize> = objects.iter().map(|o| o.unwrap()).collect();
            let mut arrows = vec![None; self.morphisms.len()];
            let mut taken = vec![false; other.morphisms.len()];
            return self.match_arrows(other, 0, &objects, &mut arrows, &mut taken);
        }
        for y in 0..other.objects.len() {
            if used[y] {
                continue;
            }
            used[y] = true;
            objects[x] = Some(y);
            if self.match_objects(other, x + 1, objects, used) {
                return true;
            }
            used[y] = false;
            objects[x] = None;
        }
        false
    }

    fn match_arrows(
        &self,
        other: &FiniteCategory,
        f: usize,
        objects: &[usize],
        arrows: &mut Vec<Option<usize>>,
        taken: &mut Vec<bool>,
    ) -> bool {
        if f == self.morphisms.len() {
            return self.compose.iter().all(|(&(g, h), &gh)| {
                other.compose(arrows[g].unwrap(), arrows[h].unwrap()) == arrows[gh]
            });
        }
        let m = &self.morphisms[f];
        for g in 0..other.morphisms.len() {
            let n = &other.morphisms[g];
            if taken[g]
                || n.source != objects[m.source]
                || n.target != objects[m.target]
                || self.is_identity(f) != other.is_identity(g)
            {
                continue;
            }
            taken[g] = true;
            arrows[f] = Some(g);
            if self.match_arrows(other, f + 1, objects, arrows, taken) {
                return true;
            }
            taken[g] = false;
            arrows[f] = None;
        }
        false
    }
}
