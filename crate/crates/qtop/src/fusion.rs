//! SU(2) level-k fusion combinatorics.
//!
//! Labels are twice-spin integers `0..=k`, so everything stays in exact
//! integer arithmetic. Block dimensions on a sphere are counted two ways: as
//! integer fusion paths, and through the modular S-matrix sum, which also
//! covers positive genus. The two routes are independent and cross-checked
//! in the tests.

use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FusionError {
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error("label {label} outside 0..={max}")]
    LabelOutOfRange { label: u32, max: u32 },
    #[error("need at least one marked point")]
    EmptyMarking,
    #[error("fusion path count exceeds u64")]
    Overflow,
    #[error("sum {value} sits {residual:e} from the nearest integer (want < 1e-6)")]
    NotIntegral { value: f64, residual: f64 },
}

/// The level-k label set. Label `a` stands for spin a/2; label 0 is the
/// fusion identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FusionLevel {
    k: u32,
}

impl FusionLevel {
    pub fn new(k: u32) -> Result<Self, FusionError> {
        if k == 0 {
            return Err(FusionError::ZeroLevel);
        }
        Ok(FusionLevel { k })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn label_count(self) -> usize {
        self.k as usize + 1
    }

    pub fn labels(self) -> impl Iterator<Item = u32> {
        0..=self.k
    }

    fn check_label(self, a: u32) -> Result<(), FusionError> {
        if a > self.k {
            Err(FusionError::LabelOutOfRange { label: a, max: self.k })
        } else {
            Ok(())
        }
    }

    /// Labels in the product of `a` and `b`: the Clebsch-Gordan range
    /// stepping by two, cut off at the level. Multiplicity-free and never
    /// empty, since max(a,b) ≤ k.
    pub fn fuse(self, a: u32, b: u32) -> Result<Vec<u32>, FusionError> {
        self.check_label(a)?;
        self.check_label(b)?;
        let lo = a.abs_diff(b);
        let hi = (a + b).min(2 * self.k - a - b);
        Ok((lo..=hi).step_by(2).collect())
    }

    /// N[b][c] = 1 iff `c` appears in fuse(a, b).
    pub fn fusion_matrix(self, a: u32) -> Result<Vec<Vec<u64>>, FusionError> {
        self.check_label(a)?;
        let n = self.label_count();
        let mut m = vec![vec![0u64; n]; n];
        for b in self.labels() {
            for c in self.fuse(a, b)? {
                m[b as usize][c as usize] = 1;
            }
        }
        Ok(m)
    }

    /// Dimension of the block space on a sphere with the given marked
    /// labels: the number of fusion paths that start at the identity, absorb
    /// each marked label in turn, and return to the identity.
    pub fn block_dim_sphere(self, marked: &[u32]) -> Result<u64, FusionError> {
        if marked.is_empty() {
            return Err(FusionError::EmptyMarking);
        }
        let mut reached = vec![0u64; self.label_count()];
        reached[0] = 1;
        for &m in marked {
            self.check_label(m)?;
            let mut next = vec![0u64; self.label_count()];
            for (b, &count) in reached.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                for c in self.fuse(m, b as u32).expect("labels validated") {
                    let slot = &mut next[c as usize];
                    *slot = slot.checked_add(count).ok_or(FusionError::Overflow)?;
                }
            }
            reached = next;
        }
        Ok(reached[0])
    }

    pub fn s_matrix(self) -> SMatrix {
        let n = self.label_count();
        let denom = self.k as f64 + 2.0;
        let norm = (2.0 / denom).sqrt();
        let entries = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| norm * (PI * ((a + 1) * (b + 1)) as f64 / denom).sin())
                    .collect()
            })
            .collect();
        SMatrix { entries }
    }

    /// Genus-g block dimension by the S-matrix sum
    /// Σ_a S[0][a]^(2−2g−n) · Π_i S[λᵢ][a], rounded to the nearest integer.
    /// A rounding residual above 1e-6 means the double-precision sum can no
    /// longer be trusted and is reported as an error instead of a guess.
    pub fn verlinde_dim(self, genus: u32, marked: &[u32]) -> Result<u64, FusionError> {
        for &m in marked {
            self.check_label(m)?;
        }
        let s = self.s_matrix();
        let expo = 2i32 - 2 * genus as i32 - marked.len() as i32;
        let mut total = 0.0f64;
        for a in 0..self.label_count() {
            // First-row entries are strictly positive, so negative powers
            // are safe.
            let mut term = s.entries[0][a].powi(expo);
            for &m in marked {
                term *= s.entries[m as usize][a];
            }
            total += term;
        }
        let rounded = total.round();
        let residual = (total - rounded).abs();
        if residual > 1e-6 || rounded < 0.0 {
            return Err(FusionError::NotIntegral { value: total, residual });
        }
        Ok(rounded as u64)
    }
}

/// Symmetric involutory matrix S[a][b] = sqrt(2/(k+2)) · sin(π(a+1)(b+1)/(k+2)).
#[derive(Debug, Clone, PartialEq)]
pub struct SMatrix {
    entries: Vec<Vec<f64>>,
}

impl SMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, a: usize, b: usize) -> f64 {
        self.entries[a][b]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.entries
    }
}
