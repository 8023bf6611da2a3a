use std::collections::VecDeque;

/// Residual network for small-integer capacities, augmented with BFS paths.
#[derive(Clone, Debug)]
pub struct UnitFlow {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    base_cap: Vec<u32>,
    // scratch
    pred: Vec<usize>,
    queue: VecDeque<usize>,
}

const NONE: usize = usize::MAX;

impl UnitFlow {
    pub fn new(nodes: usize) -> Self {
        UnitFlow {
            head: vec![NONE; nodes],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            base_cap: Vec::new(),
            pred: vec![NONE; nodes],
            queue: VecDeque::new(),
        }
    }

    /// Adds arc `a -> b` with capacity `c` and its residual twin (capacity `back`).
    pub fn add_arc(&mut self, a: usize, b: usize, c: u32, back: u32) {
        for (x, y, k) in [(a, b, c), (b, a, back)] {
            self.to.push(y);
            self.cap.push(k);
            self.base_cap.push(k);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    pub fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base_cap);
    }

    /// Max-flow from `s` to `t`, stopping once it reaches `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        self.reset();
        let mut flow = 0;
        while flow < limit {
            self.pred.iter_mut().for_each(|p| *p = NONE);
            self.queue.clear();
            self.queue.push_back(s);
            self.pred[s] = usize::MAX - 1;
            let mut found = false;
            'bfs: while let Some(x) = self.queue.pop_front() {
                let mut e = self.head[x];
                while e != NONE {
                    let y = self.to[e];
                    if self.cap[e] > 0 && self.pred[y] == NONE {
                        self.pred[y] = e;
                        if y == t {
                            found = true;
                            break 'bfs;
                        }
                        self.queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if !found {
                break;
            }
            let mut y = t;
            while y != s {
                let e = self.pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
