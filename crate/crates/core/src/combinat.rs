//! Set partitions as restricted growth strings.

/// Iterates the set partitions of `{0, .., n-1}` as restricted growth
/// strings in lexicographic order: `rgs[0] = 0` and
/// `rgs[i] <= 1 + max(rgs[..i])`. Block `b` holds every `i` with
/// `rgs[i] == b`, so blocks come out ordered by their minimum element.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[..=i])
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: n == 0,
        }
    }

    /// Advances to the next string; returns `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for k in i + 1..n {
                    self.rgs[k] = 0;
                    self.prefix_max[k] = self.prefix_max[i];
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn current(&self) -> &[usize] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.prefix_max.last().map_or(0, |m| m + 1)
    }

    /// Blocks of the current partition as bitmasks over `0..n`.
    pub fn block_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.block_count()];
        for (i, &b) in self.rgs.iter().enumerate() {
            masks[b] |= 1 << i;
        }
        masks
    }
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Ordered Bell (Fubini) numbers: `a(n) = sum_k C(n,k) a(n-k)`.
pub fn fubini(n: usize) -> u128 {
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut c = 1u128;
        let mut s = 0u128;
        for k in 1..=m {
            c = c * (m - k + 1) as u128 / k as u128;
            s += c * a[m - k];
        }
        a[m] = s;
    }
    a[n]
}
