//! Components of a class in the virtual graph coincide with components of
//! the real graph induced on the real nodes hosting that class. A slot is
//! one `(real node, class)` pair; connectivity is tracked over slots.

use crate::graph::{Graph, UnionFind};

#[derive(Clone, Debug)]
pub struct SlotTable {
    /// Per real node, `(class, slot)` sorted by class.
    at: Vec<Vec<(u32, u32)>>,
    node: Vec<u32>,
    class: Vec<u32>,
    mult: Vec<u32>,
    uf: UnionFind,
    /// Components per class; index 0 unused.
    comps: Vec<usize>,
}

impl SlotTable {
    pub fn new(n: usize, t: usize) -> Self {
        SlotTable {
            at: vec![Vec::new(); n],
            node: Vec::new(),
            class: Vec::new(),
            mult: Vec::new(),
            uf: UnionFind::new(0),
            comps: vec![0; t + 1],
        }
    }

    pub fn len(&self) -> usize {
        self.node.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node.is_empty()
    }

    pub fn slots_at(&self, x: usize) -> &[(u32, u32)] {
        &self.at[x]
    }

    pub fn slot_of(&self, x: usize, class: u32) -> Option<usize> {
        let list = &self.at[x];
        list.binary_search_by_key(&class, |&(c, _)| c)
            .ok()
            .map(|i| list[i].1 as usize)
    }

    pub fn slot_node(&self, s: usize) -> usize {
        self.node[s] as usize
    }

    pub fn slot_class(&self, s: usize) -> u32 {
        self.class[s]
    }

    pub fn multiplicity(&self, s: usize) -> u32 {
        self.mult[s]
    }

    pub fn root(&mut self, s: usize) -> usize {
        self.uf.find(s)
    }

    pub fn root_const(&self, s: usize) -> usize {
        self.uf.find_const(s)
    }

    pub fn components(&self, class: u32) -> usize {
        self.comps[class as usize]
    }

    pub fn classes(&self) -> usize {
        self.comps.len() - 1
    }

    /// Sum over classes of (components − 1), counting empty classes as zero.
    pub fn excess_components(&self) -> usize {
        self.comps
            .iter()
            .skip(1)
            .map(|&c| c.saturating_sub(1))
            .sum()
    }

    /// Registers one more virtual node of `class` at real node `x`.
    pub fn add(&mut self, g: &Graph, x: usize, class: u32) {
        let pos = match self.at[x].binary_search_by_key(&class, |&(c, _)| c) {
            Ok(i) => {
                let s = self.at[x][i].1 as usize;
                self.mult[s] += 1;
                return;
            }
            Err(pos) => pos,
        };
        let s = self.uf.push();
        self.node.push(x as u32);
        self.class.push(class);
        self.mult.push(1);
        self.at[x].insert(pos, (class, s as u32));
        self.comps[class as usize] += 1;
        for &y in g.neighbors(x) {
            if let Some(s2) = self.slot_of(y, class) {
                if self.uf.union(s, s2) {
                    self.comps[class as usize] -= 1;
                }
            }
        }
    }

    /// True iff every real node sees every class in its closed neighbourhood.
    pub fn dominates_all(&self, g: &Graph) -> bool {
        self.undominated(g).is_none()
    }

    /// Some `(real node, class)` whose closed neighbourhood misses the class.
    pub fn undominated(&self, g: &Graph) -> Option<(usize, u32)> {
        let t = self.classes();
        let mut seen = vec![usize::MAX; t + 1];
        for x in 0..g.n() {
            let mut count = 0;
            for y in std::iter::once(x).chain(g.neighbors(x).iter().copied()) {
                for &(c, _) in &self.at[y] {
                    if seen[c as usize] != x {
                        seen[c as usize] = x;
                        count += 1;
                    }
                }
            }
            if count < t {
                let c = (1..=t).find(|&c| seen[c] != x).unwrap();
                return Some((x, c as u32));
            }
        }
        None
    }

    /// Real nodes hosting `class`, increasing.
    pub fn members(&self, class: u32) -> Vec<usize> {
        (0..self.at.len())
            .filter(|&x| self.slot_of(x, class).is_some())
            .collect()
    }
}
