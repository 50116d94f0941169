//! Fixed-capacity bitset over 64-bit blocks with live-range tracking.
//!
//! Besides the blocks, each set remembers the half-open block range
//! `[lo, hi)` outside of which every block is zero. Intersections only touch
//! blocks inside the overlap of both live ranges and then shrink the range
//! to the first and last nonzero block, so sets that have emptied out at
//! the edges stop costing anything.

use crate::counters::Counters;
use crate::error::{Error, Result};

const BITS: usize = 64;

#[inline]
fn block_count(capacity: usize) -> usize {
    capacity.div_ceil(BITS)
}

#[derive(Clone, Debug)]
pub struct BlockBitset {
    capacity: usize,
    blocks: Vec<u64>,
    lo: usize,
    hi: usize,
}

impl BlockBitset {
    pub fn empty(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::InvalidCapacity);
        }
        Ok(Self {
            capacity,
            blocks: vec![0; block_count(capacity)],
            lo: 0,
            hi: 0,
        })
    }

    pub fn full(capacity: usize) -> Result<Self> {
        let mut bs = Self::empty(capacity)?;
        bs.fill();
        Ok(bs)
    }

    /// Sets every bit below the capacity.
    pub fn fill(&mut self) {
        self.blocks.fill(u64::MAX);
        let tail = self.capacity % BITS;
        if tail != 0 {
            *self.blocks.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        self.lo = 0;
        self.hi = self.blocks.len();
    }

    pub fn clear(&mut self) {
        self.blocks[self.lo..self.hi].fill(0);
        self.lo = 0;
        self.hi = 0;
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// Inclusive `(first, last)` block indices that may hold set bits, or
    /// `None` when the live range is empty.
    pub fn live_range(&self) -> Option<(usize, usize)> {
        (self.lo < self.hi).then(|| (self.lo, self.hi - 1))
    }

    #[inline]
    fn check(&self, i: usize) -> Result<()> {
        if i >= self.capacity {
            return Err(Error::Index {
                index: i,
                capacity: self.capacity,
            });
        }
        Ok(())
    }

    fn check_same_capacity(&self, other: &Self) -> Result<()> {
        if self.capacity != other.capacity {
            return Err(Error::Dimension {
                expected: self.capacity,
                actual: other.capacity,
            });
        }
        Ok(())
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.capacity && self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) -> Result<()> {
        self.check(i)?;
        let w = i / BITS;
        self.blocks[w] |= 1 << (i % BITS);
        if self.lo >= self.hi {
            self.lo = w;
            self.hi = w + 1;
        } else {
            self.lo = self.lo.min(w);
            self.hi = self.hi.max(w + 1);
        }
        Ok(())
    }

    /// Clears bit `i`. If that empties a block on the edge of the live
    /// range, the range shrinks past every zero block at that edge.
    pub fn remove(&mut self, i: usize) -> Result<()> {
        self.check(i)?;
        let w = i / BITS;
        self.blocks[w] &= !(1 << (i % BITS));
        if self.blocks[w] == 0 {
            if w == self.lo {
                while self.lo < self.hi && self.blocks[self.lo] == 0 {
                    self.lo += 1;
                }
            }
            if w + 1 == self.hi {
                while self.hi > self.lo && self.blocks[self.hi - 1] == 0 {
                    self.hi -= 1;
                }
            }
            if self.lo >= self.hi {
                self.lo = 0;
                self.hi = 0;
            }
        }
        Ok(())
    }

    /// Shrinks `[lo, hi)` to the first and last nonzero block.
    fn tighten(&mut self) {
        while self.lo < self.hi && self.blocks[self.lo] == 0 {
            self.lo += 1;
        }
        while self.hi > self.lo && self.blocks[self.hi - 1] == 0 {
            self.hi -= 1;
        }
        if self.lo >= self.hi {
            self.lo = 0;
            self.hi = 0;
        }
    }

    /// Zeroes live blocks of `self` outside `[start, end)`.
    fn clear_outside(&mut self, start: usize, end: usize) {
        if start >= end {
            self.blocks[self.lo..self.hi].fill(0);
            return;
        }
        if self.lo < start {
            self.blocks[self.lo..start.min(self.hi)].fill(0);
        }
        if self.hi > end {
            self.blocks[end.max(self.lo)..self.hi].fill(0);
        }
    }

    /// `self = self ∩ src`, visiting only the overlap of both live ranges.
    pub fn intersect_assign(&mut self, src: &Self, counters: &mut Counters) -> Result<()> {
        self.check_same_capacity(src)?;
        let start = self.lo.max(src.lo);
        let end = self.hi.min(src.hi);
        self.clear_outside(start, end);
        if start >= end {
            self.lo = 0;
            self.hi = 0;
            return Ok(());
        }
        for (d, s) in self.blocks[start..end]
            .iter_mut()
            .zip(&src.blocks[start..end])
        {
            *d &= *s;
        }
        counters.block_ops += (end - start) as u64;
        self.lo = start;
        self.hi = end;
        self.tighten();
        Ok(())
    }

    /// `self = a ∩ b`, discarding the previous contents of `self`.
    pub fn assign_intersection(
        &mut self,
        a: &Self,
        b: &Self,
        counters: &mut Counters,
    ) -> Result<()> {
        self.check_same_capacity(a)?;
        self.check_same_capacity(b)?;
        self.clear();
        let start = a.lo.max(b.lo);
        let end = a.hi.min(b.hi);
        if start >= end {
            return Ok(());
        }
        for ((d, x), y) in self.blocks[start..end]
            .iter_mut()
            .zip(&a.blocks[start..end])
            .zip(&b.blocks[start..end])
        {
            *d = x & y;
        }
        counters.block_ops += (end - start) as u64;
        self.lo = start;
        self.hi = end;
        self.tighten();
        Ok(())
    }

    /// Replaces the contents of `self` with a copy of `src`, touching only
    /// the two live ranges.
    pub fn copy_from(&mut self, src: &Self) -> Result<()> {
        self.check_same_capacity(src)?;
        self.clear();
        self.blocks[src.lo..src.hi].copy_from_slice(&src.blocks[src.lo..src.hi]);
        self.lo = src.lo;
        self.hi = src.hi;
        Ok(())
    }

    /// `self = self \ src`.
    pub fn difference_assign(&mut self, src: &Self) -> Result<()> {
        self.check_same_capacity(src)?;
        let start = self.lo.max(src.lo);
        let end = self.hi.min(src.hi);
        if start < end {
            for (d, s) in self.blocks[start..end]
                .iter_mut()
                .zip(&src.blocks[start..end])
            {
                *d &= !*s;
            }
            self.tighten();
        }
        Ok(())
    }

    pub fn popcount(&self) -> usize {
        self.blocks[self.lo..self.hi]
            .iter()
            .map(|b| b.count_ones() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks[self.lo..self.hi].iter().all(|&b| b == 0)
    }

    /// Set bits in ascending order.
    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            blocks: &self.blocks,
            next_block: self.lo,
            end: self.hi,
            current: 0,
            base: 0,
        }
    }
}

impl PartialEq for BlockBitset {
    fn eq(&self, other: &Self) -> bool {
        self.capacity == other.capacity && self.blocks == other.blocks
    }
}

impl Eq for BlockBitset {}

pub struct Ones<'a> {
    blocks: &'a [u64],
    next_block: usize,
    end: usize,
    current: u64,
    base: usize,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            if self.next_block >= self.end {
                return None;
            }
            self.current = self.blocks[self.next_block];
            self.base = self.next_block * BITS;
            self.next_block += 1;
        }
        let tz = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.base + tz)
    }
}
