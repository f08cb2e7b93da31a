/// Union-find over `0..len` with path halving.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(len: usize) -> Self {
        Dsu {
            parent: (0..len).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Joins every point to the first point carrying the same label.
    /// `points[i]` is the DSU point that position `i` of `labels` maps to.
    pub fn union_by_labels(&mut self, labels: &[u8], points: impl Fn(usize) -> usize) {
        let mut first = [usize::MAX; 256];
        for (pos, &l) in labels.iter().enumerate() {
            let p = points(pos);
            let slot = &mut first[l as usize];
            if *slot == usize::MAX {
                *slot = p;
            } else {
                self.union(*slot, p);
            }
        }
    }
}
