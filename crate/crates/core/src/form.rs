//! Fixed-length bit rows ("edge forms").
//!
//! An [`EdgeForm`] of length `V` is a linear form over `(Z/2Z)^V`; in
//! practice it is the set of vertices whose bit is set. Binary laws act
//! word-at-a-time and require both operands to have the same length.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexId;

const WORD_BITS: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeForm {
    words: Vec<u64>,
    len: usize,
}

impl EdgeForm {
    /// The null form of the given length.
    pub fn zeros(len: usize) -> Self {
        EdgeForm {
            words: vec![0; len.div_ceil(WORD_BITS)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut form = EdgeForm {
            words: vec![u64::MAX; len.div_ceil(WORD_BITS)],
            len,
        };
        form.clear_tail();
        form
    }

    /// The indicator form of a single vertex (the dual of `v`).
    pub fn vertex(v: VertexId, len: usize) -> Result<Self> {
        if v >= len {
            return Err(Error::VertexOutOfRange { vertex: v, order: len });
        }
        let mut form = Self::zeros(len);
        form.insert(v);
        Ok(form)
    }

    pub fn from_indices<I>(len: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut form = Self::zeros(len);
        for v in indices {
            if v >= len {
                return Err(Error::VertexOutOfRange { vertex: v, order: len });
            }
            form.insert(v);
        }
        Ok(form)
    }

    /// Builds a form from 0/1 indicators, e.g. `&[0, 1, 1, 0]`.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut form = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                form.insert(i);
            }
        }
        form
    }

    /// Number of positions, i.e. the order of the graph this form lives in.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// True when no bit is set.
    pub fn is_null(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.len && self.words[v / WORD_BITS] & (1 << (v % WORD_BITS)) != 0
    }

    /// Sets bit `v`. Panics if `v` is out of range.
    pub fn insert(&mut self, v: VertexId) {
        assert!(v < self.len, "bit {v} out of range for length {}", self.len);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: VertexId) {
        if v < self.len {
            self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set bits in ascending order.
    pub fn support(&self) -> Support<'_> {
        Support {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<VertexId> {
        self.support().next()
    }

    pub fn or(&self, other: &EdgeForm) -> Result<EdgeForm> {
        let mut out = self.clone();
        out.or_assign(other)?;
        Ok(out)
    }

    pub fn and(&self, other: &EdgeForm) -> Result<EdgeForm> {
        let mut out = self.clone();
        out.and_assign(other)?;
        Ok(out)
    }

    pub fn or_assign(&mut self, other: &EdgeForm) -> Result<()> {
        self.check_len(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        Ok(())
    }

    pub fn and_assign(&mut self, other: &EdgeForm) -> Result<()> {
        self.check_len(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        Ok(())
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &EdgeForm) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0))
    }

    /// Whether the two forms share a set bit.
    pub fn intersects(&self, other: &EdgeForm) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0))
    }

    pub(crate) fn or_unchecked(&mut self, other: &EdgeForm) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub(crate) fn and_unchecked(&mut self, other: &EdgeForm) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    fn check_len(&self, other: &EdgeForm) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Written like a column of the worked example: `(0,1,1,0,0)`.
impl fmt::Display for EdgeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.contains(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for EdgeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeForm{self}")
    }
}

pub struct Support<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Support<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * WORD_BITS + bit)
    }
}
