//! Depth-first reachability over contamination states.
//!
//! The rabbit is invisible, so once the hunters fix their shots the
//! contaminated set evolves deterministically: deciding whether k hunters
//! win is asking whether the empty set is reachable from the start set.
//! Every visited state is expanded at most once.

use rustc_hash::FxHashSet;

/// Deposits the low bits of `bits` into the set positions of `mask`.
fn deposit(mut bits: u128, mut mask: u64) -> u64 {
    let mut out = 0;
    while bits != 0 && mask != 0 {
        let low = mask & mask.wrapping_neg();
        if bits & 1 == 1 {
            out |= low;
        }
        bits >>= 1;
        mask &= mask - 1;
    }
    out
}

/// Next integer with the same number of set bits.
fn gosper(c: u128) -> u128 {
    let u = c & c.wrapping_neg();
    let v = c + u;
    v + (((v ^ c) / u) >> 2)
}

pub(crate) struct Space {
    adj: Vec<u64>,
}

impl Space {
    pub(crate) fn new(adj: Vec<u64>) -> Self {
        Space { adj }
    }

    #[inline]
    pub(crate) fn advance(&self, z: u64, s: u64) -> u64 {
        let mut rest = z & !s;
        let mut out = 0;
        while rest != 0 {
            out |= self.adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    }
}

/// Shots available from one state, largest first, ties by ascending mask.
struct Frame {
    z: u64,
    cleared: u64,
    touched: u64,
    forced: u64,
    free: u64,
    free_len: u32,
    size: u32,
    min_size: u32,
    combo: u128,
    shot: u64,
}

impl Frame {
    fn new(space: &Space, z: u64, cleared: u64, k: u32, monotone: bool) -> Frame {
        let forced = cleared & z;
        let free = z & !forced;
        let top = k.min(z.count_ones());
        let min_size = if monotone {
            forced.count_ones().max(1)
        } else {
            top
        };
        let mut f = Frame {
            z,
            cleared,
            touched: if monotone { space.advance(z, 0) } else { 0 },
            forced,
            free,
            free_len: free.count_ones(),
            size: top,
            min_size,
            combo: 0,
            shot: 0,
        };
        f.reset_combo();
        f
    }

    fn extra(&self) -> u32 {
        self.size - self.forced.count_ones()
    }

    fn reset_combo(&mut self) {
        self.combo = (1u128 << self.extra()) - 1;
    }

    fn next_shot(&mut self) -> Option<u64> {
        loop {
            if self.size < self.min_size || self.size < self.forced.count_ones() {
                return None;
            }
            if self.combo < 1u128 << self.free_len {
                let s = self.forced | deposit(self.combo, self.free);
                self.combo = if self.combo == 0 {
                    1u128 << self.free_len
                } else {
                    gosper(self.combo)
                };
                return Some(s);
            }
            self.size -= 1;
            if self.size < self.min_size || self.size < self.forced.count_ones() {
                return None;
            }
            self.reset_combo();
        }
    }
}

/// Searches for a winning sequence of shots from `start` with at most `k`
/// hunters. In monotone mode a shot must include every cleared vertex that
/// is contaminated. `start_is_full` enables the check that contaminated sets
/// never grow under monotone play from the whole vertex set.
pub(crate) fn search(
    space: &Space,
    start: u64,
    k: usize,
    monotone: bool,
    start_is_full: bool,
) -> Option<Vec<u64>> {
    let k = k.min(64) as u32;
    let mut seen_z: FxHashSet<u64> = FxHashSet::default();
    let mut seen_zc: FxHashSet<(u64, u64)> = FxHashSet::default();
    if monotone {
        seen_zc.insert((start, 0));
    } else {
        seen_z.insert(start);
    }
    let mut stack = vec![Frame::new(space, start, 0, k, monotone)];
    while let Some(top) = stack.last_mut() {
        let Some(s) = top.next_shot() else {
            stack.pop();
            continue;
        };
        top.shot = s;
        let z = top.z;
        let z2 = space.advance(z, s);
        if z2 == 0 {
            return Some(stack.iter().map(|f| f.shot).collect());
        }
        let cleared = if monotone {
            if start_is_full && z2 & !z != 0 {
                continue;
            }
            let c2 = top.cleared | s | (top.touched & !z2);
            if (c2 & z2).count_ones() > k || !seen_zc.insert((z2, c2)) {
                continue;
            }
            c2
        } else {
            // a superset of the current state can never be closer to winning
            if z2 & z == z || !seen_z.insert(z2) {
                continue;
            }
            0
        };
        stack.push(Frame::new(space, z2, cleared, k, monotone));
    }
    None
}
