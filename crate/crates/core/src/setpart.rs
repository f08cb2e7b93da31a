//! Set partitions as restricted growth strings.
//!
//! A partition of `{0, .., m-1}` is encoded by `labels[i]` = index of the
//! block containing `i`, where blocks are numbered in order of their least
//! element. This encoding is unique, so it doubles as the canonical form.

/// Renumbers an arbitrary block labelling into restricted growth form.
pub fn canonical_labels<T: Copy + Eq>(raw: &[T]) -> Vec<u8> {
    let mut seen: Vec<T> = Vec::new();
    raw.iter()
        .map(|v| match seen.iter().position(|s| s == v) {
            Some(i) => i as u8,
            None => {
                seen.push(*v);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

/// Number of blocks of a restricted growth string.
pub fn block_count(labels: &[u8]) -> usize {
    labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
}

/// Iterates restricted growth strings of length `m` in lexicographic order.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    labels: Vec<u8>,
    // prefix maxima: max[i] = max(labels[..=i])
    max: Vec<u8>,
    done: bool,
}

impl SetPartitions {
    pub fn new(m: usize) -> Self {
        SetPartitions {
            labels: vec![0; m],
            max: vec![0; m],
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.labels.clone();
        let m = self.labels.len();
        // rightmost position that can still grow
        let mut i = m;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.labels[i] <= self.max[i - 1] {
                self.labels[i] += 1;
                self.max[i] = self.max[i - 1].max(self.labels[i]);
                for j in i + 1..m {
                    self.labels[j] = 0;
                    self.max[j] = self.max[i];
                }
                break;
            }
        }
        Some(out)
    }
}
