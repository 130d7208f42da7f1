/// Union-find over nodes with a ℤ₂ weight relative to the parent.
/// A union that disagrees with an existing parity marks the class contradictory.
#[derive(Debug, Clone, Default)]
pub(crate) struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<u8>,
    rank: Vec<u8>,
    contradictory: Vec<bool>,
}

impl ParityUnionFind {
    pub fn add(&mut self) -> usize {
        let n = self.parent.len();
        self.parent.push(n);
        self.parity.push(0);
        self.rank.push(0);
        self.contradictory.push(false);
        n
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, u8) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (r, pp) = self.find(p);
        self.parent[x] = r;
        self.parity[x] ^= pp;
        (r, self.parity[x])
    }

    /// Records `parity(a) + parity(b) = w`.
    pub fn union(&mut self, a: usize, b: usize, w: u8) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != w {
                self.contradictory[ra] = true;
            }
            return;
        }
        let (big, small) = if self.rank[ra] >= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.parity[small] = pa ^ pb ^ w;
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        let c = self.contradictory[small];
        self.contradictory[big] |= c;
    }

    pub fn is_contradictory(&mut self, x: usize) -> bool {
        let (r, _) = self.find(x);
        self.contradictory[r]
    }
}
