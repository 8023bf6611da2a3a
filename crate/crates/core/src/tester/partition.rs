use crate::cds::ClassAssignment;
use crate::error::{Error, Result};
use crate::graph::{Graph, UnionFind};
use crate::rng::StreamRng;

/// Class partition of the virtual nodes hosted on each real node, stored as
/// `(class, multiplicity)` lists sorted by class. A plain graph partition has
/// one virtual node per real node.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassPartition {
    pub t: usize,
    pub hosted: Vec<Vec<(u32, u32)>>,
}

impl ClassPartition {
    pub fn from_labels(t: usize, labels: &[u32]) -> Result<Self> {
        if let Some(&c) = labels.iter().find(|&&c| c == 0 || c as usize > t) {
            return Err(Error::InvalidParam(format!("class {c} outside 1..={t}")));
        }
        Ok(ClassPartition {
            t,
            hosted: labels.iter().map(|&c| vec![(c, 1)]).collect(),
        })
    }

    pub fn from_assignment(ca: &ClassAssignment) -> Self {
        let hosted = (0..ca.n)
            .map(|x| {
                ca.slots
                    .slots_at(x)
                    .iter()
                    .map(|&(c, s)| (c, ca.slots.multiplicity(s as usize)))
                    .collect()
            })
            .collect();
        ClassPartition { t: ca.t, hosted }
    }

    pub fn n(&self) -> usize {
        self.hosted.len()
    }

    pub fn virtual_count(&self) -> usize {
        self.hosted.iter().flatten().map(|&(_, m)| m as usize).sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.hosted
            .iter()
            .map(|h| h.iter().map(|&(_, m)| m as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn hosts(&self, x: usize, class: u32) -> bool {
        self.hosted[x]
            .binary_search_by_key(&class, |&(c, _)| c)
            .is_ok()
    }

    /// First real node (with its first missing class) whose closed neighbourhood misses a class.
    pub fn undominated(&self, g: &Graph) -> Option<(usize, u32)> {
        let mut seen = vec![usize::MAX; self.t + 1];
        for x in 0..self.n() {
            if self.hosted[x].is_empty() {
                continue;
            }
            for y in std::iter::once(x).chain(g.neighbors(x).iter().copied()) {
                for &(c, _) in &self.hosted[y] {
                    seen[c as usize] = x;
                }
            }
            if let Some(c) = (1..=self.t).find(|&c| seen[c] != x) {
                return Some((x, c as u32));
            }
        }
        None
    }

    /// Union-find over `(node, class)` slots; returns the slot offsets and the structure.
    pub(crate) fn slot_components(&self, g: &Graph) -> (Vec<usize>, UnionFind) {
        let mut offset = Vec::with_capacity(self.n() + 1);
        offset.push(0);
        for h in &self.hosted {
            offset.push(offset.last().unwrap() + h.len());
        }
        let mut uf = UnionFind::new(*offset.last().unwrap());
        for e in g.edges() {
            let (a, b) = (&self.hosted[e.u], &self.hosted[e.v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].0.cmp(&b[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        uf.union(offset[e.u] + i, offset[e.v] + j);
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        (offset, uf)
    }

    /// Per class, the number of connected components (index 0 unused).
    pub fn component_counts(&self, g: &Graph) -> Vec<usize> {
        let (offset, mut uf) = self.slot_components(g);
        let mut counts = vec![0; self.t + 1];
        for x in 0..self.n() {
            for (j, &(c, _)) in self.hosted[x].iter().enumerate() {
                let s = offset[x] + j;
                if uf.find(s) == s {
                    counts[c as usize] += 1;
                }
            }
        }
        counts
    }

    pub fn is_valid_cds_partition(&self, g: &Graph) -> bool {
        self.undominated(g).is_none() && self.component_counts(g)[1..].iter().all(|&c| c == 1)
    }

    fn move_slot(&mut self, x: usize, from: u32, to: u32) {
        let h = &mut self.hosted[x];
        let i = h.binary_search_by_key(&from, |&(c, _)| c).unwrap();
        let m = h.remove(i).1;
        match h.binary_search_by_key(&to, |&(c, _)| c) {
            Ok(j) => h[j].1 += m,
            Err(j) => h.insert(j, (to, m)),
        }
    }
}

/// Corrupts a valid partition so that exactly one class becomes disconnected
/// while every class still dominates. Class `class` loses the hosts of two
/// consecutive distance layers around a random member; they move to another
/// class. Returns the corrupted partition and the moved real nodes, or `None`
/// when no band keeps domination intact.
pub fn split_class(
    g: &Graph,
    part: &ClassPartition,
    class: u32,
    seed: u64,
) -> Option<(ClassPartition, Vec<usize>)> {
    if part.t < 2 {
        return None;
    }
    let members: Vec<usize> = (0..part.n()).filter(|&x| part.hosts(x, class)).collect();
    if members.len() < 3 {
        return None;
    }
    let mut rng = StreamRng::new(seed, "split-class", class as u64);
    let other = {
        let o = 1 + rng.below(part.t as u64 - 1) as u32;
        if o >= class {
            o + 1
        } else {
            o
        }
    };
    let starts: Vec<usize> = (0..members.len().min(8))
        .map(|_| members[rng.below(members.len() as u64) as usize])
        .collect();
    for &start in &starts {
        // distances inside the class
        let mut dist = vec![usize::MAX; part.n()];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX && part.hosts(y, class) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let depth = members
            .iter()
            .map(|&x| dist[x])
            .filter(|&d| d != usize::MAX)
            .max()
            .unwrap_or(0);
        for width in [2, 1] {
            for r in 1..=depth.saturating_sub(width) {
                let band: Vec<usize> = members
                    .iter()
                    .copied()
                    .filter(|&x| dist[x] >= r && dist[x] < r + width)
                    .collect();
                let mut out = part.clone();
                for &x in &band {
                    out.move_slot(x, class, other);
                }
                if out.undominated(g).is_none() && out.component_counts(g)[class as usize] >= 2 {
                    return Some((out, band));
                }
            }
        }
    }
    None
}
