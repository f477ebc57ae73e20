//! Complete, duplicate-free enumeration of monic integer polynomials of
//! degree `d <= 5` whose roots are all real and lie in the open interval
//! `(-B, B)` for an exact bound `B = a + b*sqrt(6)`, with irreducibility
//! filtering, deterministic sharding, and resumable checkpoints.
//!
//! # Method
//!
//! Write `F_k = f^(d-k)` for the scaled derivatives of the target polynomial
//! `f`; then `F_k' = F_{k-1}` exactly, and `F_k` depends only on the top `k`
//! coefficients of `f`. By Rolle's theorem, if all roots of `f` lie in
//! `(-B, B)` then so do the roots of every `F_k`. The enumeration walks the
//! tree of coefficient prefixes in lexicographic order on
//! `(a_{d-1}, ..., a_0)`:
//!
//! - at each node the feasible integer range for the next coefficient is cut
//!   down by exact sign constraints at `±B` (evaluated in `Z[sqrt(6)]`) and
//!   by the sign-alternation constraints of `F_{k+1}` at the isolated roots
//!   of `F_k`, relaxed outward through rational isolating intervals so the
//!   range provably contains every completion;
//! - each candidate is then accepted exactly: `F_{k+1}` has all roots in
//!   `(-B, B)` if and only if its squarefree part is real-rooted (a Sturm
//!   count at `±inf`, no irrational evaluations) given that the endpoint
//!   sign conditions hold — which the range bounds enforce exactly — and
//!   that `F_k` already passed (the derivative conditions).
//!
//! Roots exactly at `±B` are excluded (the interval is open): for the
//! default bound `2 + sqrt(6)` this is observable only through integer
//! multiples of `x^2 - 4x - 2` and `x^2 + 4x - 2`, which are rejected.
//! Polynomials with repeated roots are included in the raw stream (they are
//! never irreducible, so the irreducibility filter removes them).

mod checkpoint;
mod enumerate;

pub use checkpoint::{write_checkpoint_atomic, HuntCheckpoint, CHECKPOINT_VERSION};
pub use enumerate::HuntStream;

use crate::exact::QuadIrrBound;
use std::fmt;

/// A single enumeration job: degree, root bound, irreducibility filter, and
/// an optional shard of a partitioned run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntJob {
    degree: u32,
    bound: QuadIrrBound,
    irreducible_only: bool,
    shards: u32,
    shard_index: u32,
}

impl HuntJob {
    /// Creates a job over all shards (an unpartitioned run).
    ///
    /// `degree` must lie in `1..=5` and `bound` must be positive.
    pub fn new(
        degree: u32,
        bound: QuadIrrBound,
        irreducible_only: bool,
    ) -> Result<Self, HuntError> {
        if !(1..=5).contains(&degree) {
            return Err(HuntError::UnsupportedDegree(degree));
        }
        if bound.sign() <= 0 {
            return Err(HuntError::NonPositiveBound);
        }
        Ok(HuntJob {
            degree,
            bound,
            irreducible_only,
            shards: 1,
            shard_index: 0,
        })
    }

    /// Restricts the job to one shard of a deterministic partition on the
    /// top coefficient: shard `i` of `n` processes every `n`-th top-level
    /// branch starting at the `i`-th.
    pub fn with_shard(mut self, index: u32, total: u32) -> Result<Self, HuntError> {
        if total == 0 || index >= total {
            return Err(HuntError::BadShard { index, total });
        }
        self.shards = total;
        self.shard_index = index;
        Ok(self)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn bound(&self) -> &QuadIrrBound {
        &self.bound
    }

    pub fn irreducible_only(&self) -> bool {
        self.irreducible_only
    }

    /// `(index, total)` of the shard this job covers.
    pub fn shard(&self) -> (u32, u32) {
        (self.shard_index, self.shards)
    }
}

/// Errors for job construction and checkpoint handling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HuntError {
    UnsupportedDegree(u32),
    NonPositiveBound,
    BadShard { index: u32, total: u32 },
    /// The checkpoint text is malformed or has the wrong version.
    CheckpointParse(String),
    /// The checkpoint was produced by a different job.
    CheckpointMismatch(String),
}

impl fmt::Display for HuntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HuntError::UnsupportedDegree(d) => {
                write!(f, "unsupported degree {d}: expected 1..=5")
            }
            HuntError::NonPositiveBound => write!(f, "root bound must be positive"),
            HuntError::BadShard { index, total } => {
                write!(f, "invalid shard {index} of {total}")
            }
            HuntError::CheckpointParse(m) => write!(f, "malformed checkpoint: {m}"),
            HuntError::CheckpointMismatch(m) => {
                write!(f, "checkpoint does not match this job: {m}")
            }
        }
    }
}

impl std::error::Error for HuntError {}

/// Streams every monic integer polynomial of the job's degree with all roots
/// in `(-bound, bound)`, in strictly increasing lexicographic order on the
/// coefficient tuple `(a_{d-1}, ..., a_0)`.
pub fn enumerate_totally_real(job: &HuntJob) -> HuntStream {
    HuntStream::new(job.clone(), None, 0)
}

/// Number of polynomials the job emits; equals the stream length.
pub fn count(job: &HuntJob) -> u64 {
    let mut stream = enumerate_totally_real(job);
    let mut n = 0u64;
    while stream.next().is_some() {
        n += 1;
    }
    n
}

/// Continues an interrupted run exactly where the checkpoint stopped: the
/// stream emits precisely the polynomials that follow the last fully
/// processed top-level branch.
pub fn resume(ck: &HuntCheckpoint) -> Result<HuntStream, HuntError> {
    Ok(HuntStream::new(ck.job().clone(), ck.last_top(), ck.emitted()))
}
