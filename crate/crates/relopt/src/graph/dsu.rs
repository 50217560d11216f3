/// Union-find with union by size and an undo log.
///
/// Path compression is omitted so that [`Dsu::rollback`] can restore any
/// earlier state recorded by [`Dsu::checkpoint`].
#[derive(Clone, Debug)]
pub struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    log: Vec<(usize, usize)>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n], components: n, log: Vec::new() }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns whether they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        self.log.push((rb, ra));
        true
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn checkpoint(&self) -> usize {
        self.log.len()
    }

    pub fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (child, root) = self.log.pop().unwrap();
            self.parent[child] = child;
            self.size[root] -= self.size[child];
            self.components += 1;
        }
    }

    /// Dense component labels `0..components` in order of first vertex.
    pub fn labels(&self) -> Vec<usize> {
        let n = self.parent.len();
        let mut label = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for v in 0..n {
            let r = self.find(v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[v] = label[r];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::Dsu;

    #[test]
    fn rollback_restores_components() {
        let mut d = Dsu::new(4);
        d.union(0, 1);
        let mark = d.checkpoint();
        d.union(2, 3);
        d.union(1, 2);
        assert_eq!(d.components(), 1);
        d.rollback(mark);
        assert_eq!(d.components(), 3);
        assert!(d.same(0, 1));
        assert!(!d.same(1, 2));
        assert_eq!(d.labels(), vec![0, 0, 1, 2]);
    }
}
