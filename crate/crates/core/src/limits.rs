//! Size bounds for the exponential algorithms.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Hard ceiling on non-singleton faces: masks are single `u64` words.
pub const MAX_FACE_WORD: usize = 64;

/// Configurable size bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest base set accepted by canonicalization and the coproduct.
    pub max_vertices: usize,
    /// Largest number of non-singleton faces for lattice enumeration.
    pub max_faces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 16,
            max_faces: 24,
        }
    }
}

impl Limits {
    /// Defaults, with `MCX_MAX_FACES` overriding the face bound.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var("MCX_MAX_FACES")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            limits.max_faces = v.min(MAX_FACE_WORD);
        }
        limits
    }

    pub fn check_vertices(&self, n: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::SizeLimitExceeded {
                what: "vertex count",
                actual: n,
                limit: self.max_vertices,
            });
        }
        Ok(())
    }

    pub fn check_faces(&self, m: usize) -> Result<()> {
        if m > self.max_faces {
            return Err(Error::SizeLimitExceeded {
                what: "non-singleton face count",
                actual: m,
                limit: self.max_faces,
            });
        }
        Ok(())
    }
}

/// Process-wide limits, read once from the environment.
pub fn limits() -> &'static Limits {
    static LIMITS: OnceLock<Limits> = OnceLock::new();
    LIMITS.get_or_init(Limits::from_env)
}
