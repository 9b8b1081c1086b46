//! Integer partitions in canonical form.

use std::fmt;

use crate::error::Error;

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
/// The empty partition is valid and indexes the constant Schur polynomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Canonicalizes `parts`: trailing zeros are trimmed, anything not
    /// weakly decreasing is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses a comma-separated part list, for example `"3,1,1"`. The empty
    /// string and `"0"` both denote the empty partition.
    pub fn parse(input: &str) -> Result<Self, Error> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in trimmed.split(',') {
            let piece = piece.trim();
            let value: usize = piece.parse().map_err(|_| {
                Error::InvalidPartition(format!("bad part {piece:?} in {input:?}"))
            })?;
            parts.push(value);
        }
        Partition::new(parts)
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, written |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `k`-th part, 1-indexed, zero beyond the length.
    pub fn part(&self, k: usize) -> usize {
        assert!(k >= 1, "parts are 1-indexed");
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.len(), "cannot pad below the length");
        let mut out = self.parts.clone();
        out.resize(n, 0);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions with at most `max_len` parts, each at most `max_part`,
/// including the empty partition. Deterministic order: parts are extended
/// depth-first with the next part running from 1 up to the previous part.
pub fn partitions_in_box(max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut prefix = Vec::new();
    extend(max_part, max_len, &mut prefix, &mut out);
    out
}

fn extend(max_part: usize, max_len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if prefix.len() == max_len {
        return;
    }
    let bound = prefix.last().copied().unwrap_or(max_part);
    for next in 1..=bound {
        prefix.push(next);
        out.push(Partition {
            parts: prefix.clone(),
        });
        extend(max_part, max_len, prefix, out);
        prefix.pop();
    }
}
