//! Simplicial operators: order-preserving maps `[m] -> [n]`.

use std::fmt;

use crate::error::{Error, Result};

/// An order-preserving map `[source] -> [target]`, stored as its value list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != source + 1 {
            return Err(Error::InvalidParameters(format!(
                "a map out of [{source}] needs {} values, got {}",
                source + 1,
                values.len()
            )));
        }
        if values.iter().any(|&v| v > target) {
            return Err(Error::InvalidParameters(format!(
                "value out of range for target [{target}]: {values:?}"
            )));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameters(format!(
                "values are not order-preserving: {values:?}"
            )));
        }
        Ok(MonotoneMap { target, values })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            target: n,
            values: (0..=n).collect(),
        }
    }

    /// The coface `δ_i : [n-1] -> [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "coface δ_{i} into [{n}]");
        MonotoneMap {
            target: n,
            values: (0..=n).filter(|&v| v != i).collect(),
        }
    }

    /// The codegeneracy `σ_i : [n+1] -> [n]` hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "codegeneracy σ_{i} onto [{n}]");
        MonotoneMap {
            target: n,
            values: (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect(),
        }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &MonotoneMap) -> Result<MonotoneMap> {
        if first.target != self.source() {
            return Err(Error::InvalidParameters(format!(
                "cannot compose [{}] -> [{}] after [{}] -> [{}]",
                self.source(),
                self.target,
                first.source(),
                first.target
            )));
        }
        Ok(MonotoneMap {
            target: self.target,
            values: first.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    /// Epi-mono factorization `self = mono ∘ epi`.
    pub fn factor(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let epi: Vec<usize> = self
            .values
            .iter()
            .map(|v| image.binary_search(v).unwrap())
            .collect();
        let epi = MonotoneMap {
            target: image.len() - 1,
            values: epi,
        };
        let mono = MonotoneMap {
            target: self.target,
            values: image,
        };
        (epi, mono)
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}]:", self.source(), self.target)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// All monotone surjections `[m] -> [d]`, in lexicographic order of their value lists.
pub fn surjections(m: usize, d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if d > m {
        return out;
    }
    // a surjection is determined by the d positions j in 0..m where it steps up
    let mut steps: Vec<usize> = (0..d).collect();
    loop {
        let mut values = Vec::with_capacity(m + 1);
        let mut level = 0u8;
        values.push(0);
        for j in 0..m {
            if steps.binary_search(&j).is_ok() {
                level += 1;
            }
            values.push(level);
        }
        out.push(values);
        // next combination of d steps out of m, lexicographically
        let mut i = d;
        loop {
            if i == 0 {
                return reorder(out);
            }
            i -= 1;
            if steps[i] < m - d + i {
                steps[i] += 1;
                for j in i + 1..d {
                    steps[j] = steps[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn reorder(mut v: Vec<Vec<u8>>) -> Vec<Vec<u8>> {
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn surjection_counts_are_binomial() {
        for m in 0..7 {
            for d in 0..=m {
                let all = surjections(m, d);
                assert_eq!(all.len(), binomial(m, d), "m={m} d={d}");
                for s in &all {
                    let map = MonotoneMap::new(m, d, s.iter().map(|&v| v as usize).collect())
                        .unwrap();
                    assert!(map.is_surjective());
                }
            }
        }
        assert!(surjections(2, 3).is_empty());
    }

    #[test]
    fn cosimplicial_identities() {
        for n in 2..6 {
            for j in 0..=n {
                for i in 0..j {
                    // δ_j δ_i = δ_i δ_{j-1}
                    let lhs = MonotoneMap::coface(n, j)
                        .compose(&MonotoneMap::coface(n - 1, i))
                        .unwrap();
                    let rhs = MonotoneMap::coface(n, i)
                        .compose(&MonotoneMap::coface(n - 1, j - 1))
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // σ_j δ_i = id for i = j, j + 1
        for n in 0..5 {
            for j in 0..=n {
                for i in [j, j + 1] {
                    let c = MonotoneMap::codegeneracy(n, j)
                        .compose(&MonotoneMap::coface(n + 1, i))
                        .unwrap();
                    assert_eq!(c, MonotoneMap::identity(n));
                }
            }
        }
    }

    #[test]
    fn factorization_recomposes() {
        let f = MonotoneMap::new(4, 5, vec![0, 2, 2, 3, 5]).unwrap();
        let (epi, mono) = f.factor();
        assert!(epi.is_surjective());
        assert!(mono.is_injective());
        assert_eq!(mono.compose(&epi).unwrap(), f);
    }

    #[test]
    fn rejects_non_monotone() {
        assert!(MonotoneMap::new(2, 2, vec![0, 2, 1]).is_err());
        assert!(MonotoneMap::new(1, 1, vec![0, 2]).is_err());
        assert!(MonotoneMap::new(2, 2, vec![0, 1]).is_err());
    }
}
