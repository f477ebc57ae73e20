//! Versioned plain-text checkpoints for resumable enumeration runs.
//!
//! A checkpoint records the job descriptor, the last fully processed
//! top-level branch of the deterministic traversal, the number of
//! polynomials emitted through that branch, and (for drivers that write an
//! output file) the byte length of the output at that instant. Resuming from
//! a checkpoint and running to completion yields output byte-identical to an
//! uninterrupted run: the driver truncates its file to `output_bytes` and the
//! stream continues with the first branch after `last_top`.

use super::{HuntError, HuntJob};
use crate::exact::QuadIrrBound;
use num_bigint::BigInt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

/// Version tag on the first line of every checkpoint file.
pub const CHECKPOINT_VERSION: &str = "sumsq-hunt-checkpoint v1";

/// Frontier state of an interrupted enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntCheckpoint {
    job: HuntJob,
    last_top: Option<i64>,
    emitted: u64,
    output_bytes: u64,
}

impl HuntCheckpoint {
    pub(super) fn new(job: HuntJob, last_top: Option<i64>, emitted: u64) -> Self {
        HuntCheckpoint { job, last_top, emitted, output_bytes: 0 }
    }

    pub fn job(&self) -> &HuntJob {
        &self.job
    }

    /// The last fully processed value of the top coefficient `a_{d-1}`, or
    /// `None` when no branch has completed yet.
    pub fn last_top(&self) -> Option<i64> {
        self.last_top
    }

    /// Polynomials emitted up to and including the last completed branch.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Output-file length in bytes at the checkpoint instant (0 when the
    /// driver keeps no file).
    pub fn output_bytes(&self) -> u64 {
        self.output_bytes
    }

    /// Returns a copy carrying the driver's output-file length.
    pub fn with_output_bytes(mut self, bytes: u64) -> Self {
        self.output_bytes = bytes;
        self
    }

    /// Rejects a checkpoint written for a different job.
    pub fn ensure_matches(&self, job: &HuntJob) -> Result<(), HuntError> {
        if &self.job != job {
            return Err(HuntError::CheckpointMismatch(format!(
                "checkpoint job {:?} differs from requested job {:?}",
                self.job, job
            )));
        }
        Ok(())
    }

    /// Serializes to the versioned text format.
    pub fn render(&self) -> String {
        let (shard, shards) = self.job.shard();
        format!(
            "{version}\n\
             degree={degree}\n\
             bound={ba},{bb}\n\
             irreducible={irr}\n\
             shards={shards}\n\
             shard={shard}\n\
             last_top={last}\n\
             emitted={emitted}\n\
             output_bytes={bytes}\n",
            version = CHECKPOINT_VERSION,
            degree = self.job.degree(),
            ba = self.job.bound().a,
            bb = self.job.bound().b,
            irr = self.job.irreducible_only(),
            shards = shards,
            shard = shard,
            last = match self.last_top {
                Some(v) => v.to_string(),
                None => "none".to_string(),
            },
            emitted = self.emitted,
            bytes = self.output_bytes,
        )
    }

    /// Parses the versioned text format, rejecting unknown versions and
    /// malformed fields.
    pub fn parse(text: &str) -> Result<Self, HuntError> {
        let mut lines = text.lines();
        let version = lines.next().unwrap_or("");
        if version != CHECKPOINT_VERSION {
            return Err(HuntError::CheckpointParse(format!(
                "unknown version line {version:?}, expected {CHECKPOINT_VERSION:?}"
            )));
        }
        let mut degree = None;
        let mut bound = None;
        let mut irreducible = None;
        let mut shards = None;
        let mut shard = None;
        let mut last_top = None;
        let mut emitted = None;
        let mut output_bytes = None;
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| HuntError::CheckpointParse(format!("bad line {line:?}")))?;
            let bad = |what: &str| {
                HuntError::CheckpointParse(format!("bad {what} value {value:?}"))
            };
            match key {
                "degree" => degree = Some(value.parse::<u32>().map_err(|_| bad("degree"))?),
                "bound" => {
                    let (a, b) = value
                        .split_once(',')
                        .ok_or_else(|| bad("bound"))?;
                    let a = BigInt::from_str(a.trim()).map_err(|_| bad("bound"))?;
                    let b = BigInt::from_str(b.trim()).map_err(|_| bad("bound"))?;
                    bound = Some(QuadIrrBound::new(a, b));
                }
                "irreducible" => {
                    irreducible = Some(value.parse::<bool>().map_err(|_| bad("irreducible"))?)
                }
                "shards" => shards = Some(value.parse::<u32>().map_err(|_| bad("shards"))?),
                "shard" => shard = Some(value.parse::<u32>().map_err(|_| bad("shard"))?),
                "last_top" => {
                    last_top = Some(if value == "none" {
                        None
                    } else {
                        Some(value.parse::<i64>().map_err(|_| bad("last_top"))?)
                    })
                }
                "emitted" => emitted = Some(value.parse::<u64>().map_err(|_| bad("emitted"))?),
                "output_bytes" => {
                    output_bytes =
                        Some(value.parse::<u64>().map_err(|_| bad("output_bytes"))?)
                }
                other => {
                    return Err(HuntError::CheckpointParse(format!("unknown key {other:?}")))
                }
            }
        }
        let missing = |what: &str| HuntError::CheckpointParse(format!("missing {what}"));
        let degree = degree.ok_or_else(|| missing("degree"))?;
        let bound = bound.ok_or_else(|| missing("bound"))?;
        let irreducible = irreducible.ok_or_else(|| missing("irreducible"))?;
        let shards = shards.ok_or_else(|| missing("shards"))?;
        let shard = shard.ok_or_else(|| missing("shard"))?;
        let last_top = last_top.ok_or_else(|| missing("last_top"))?;
        let emitted = emitted.ok_or_else(|| missing("emitted"))?;
        let output_bytes = output_bytes.ok_or_else(|| missing("output_bytes"))?;
        let job = HuntJob::new(degree, bound, irreducible)?.with_shard(shard, shards)?;
        Ok(HuntCheckpoint { job, last_top, emitted, output_bytes })
    }
}

/// Writes a checkpoint atomically: the text goes to a sibling temp file which
/// is then renamed over the target, so a reader never sees a torn file.
pub fn write_checkpoint_atomic(path: &Path, ck: &HuntCheckpoint) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(ck.render().as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}
