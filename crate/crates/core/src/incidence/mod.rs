//! Incidence structures and the block designs built on them.

mod action;
mod io;
mod params;

pub use action::{DesignAction, LocalPrimitivityReport};
pub use io::{format_design_file, parse_design_file};
pub use params::{t_design_strength, verify_design, DesignParameters, TDesignStrength};

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::perm::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("block {block} contains point {point} more than once")]
    RepeatedPointInBlock { block: usize, point: usize },
    #[error("point {point} out of range (v = {v})")]
    PointOutOfRange { point: usize, v: usize },
    #[error("structure has no blocks")]
    NoBlocks,
    #[error("degenerate: v = {0} (need at least 3 points)")]
    TooFewPoints(usize),
    #[error("degenerate: blocks of size 1")]
    BlockSizeOne,
    #[error("block sizes vary ({first} and {other})")]
    NonConstantBlockSize { first: usize, other: usize },
    #[error("every block contains every point (trivial design)")]
    TrivialDesign,
    #[error("points {0} and {1} lie in no common block")]
    UncoveredPair(usize, usize),
    #[error("pair {first:?} lies in {first_count} blocks but pair {other:?} in {other_count}")]
    NonConstantLambda {
        first: (usize, usize),
        first_count: usize,
        other: (usize, usize),
        other_count: usize,
    },
    #[error("replication number varies between points")]
    NonConstantReplication,
    #[error("not a 1-design")]
    NotOneDesign,
    #[error("point {0} lies in no block")]
    PointInNoBlock(usize),
    #[error("complement undefined: a block contains all points")]
    FullBlock,
    #[error("incidence graph is disconnected")]
    Disconnected,
    #[error("group does not preserve the block set")]
    NotPreserved,
    #[error("group degree {group} differs from v = {v}")]
    DegreeMismatch { group: usize, v: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Points `0..v` and a list of blocks, each a sorted point set. The block list
/// is kept sorted lexicographically; repeated blocks are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

/// Result of [`IncidenceStructure::dual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    pub structure: IncidenceStructure,
    /// The source had repeated blocks, so some dual points are indistinguishable.
    pub repeated_blocks: bool,
}

impl IncidenceStructure {
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        let mut canon = Vec::with_capacity(blocks.len());
        for (i, mut block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(DesignError::EmptyBlock(i));
            }
            block.sort_unstable();
            for w in block.windows(2) {
                if w[0] == w[1] {
                    return Err(DesignError::RepeatedPointInBlock { block: i, point: w[0] });
                }
            }
            if let Some(&last) = block.last() {
                if last >= v {
                    return Err(DesignError::PointOutOfRange { point: last, v });
                }
            }
            canon.push(block);
        }
        canon.sort();
        Ok(IncidenceStructure { v, blocks: canon })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn flag_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Indices of the blocks containing `point`.
    pub fn blocks_through(&self, point: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].binary_search(&point).is_ok())
            .collect()
    }

    pub fn incident(&self, point: usize, block: usize) -> bool {
        self.blocks[block].binary_search(&point).is_ok()
    }

    /// Index of the first block equal to `points` (which must be sorted).
    pub fn find_block(&self, points: &[usize]) -> Option<usize> {
        let i = self.blocks.partition_point(|b| b.as_slice() < points);
        (i < self.blocks.len() && self.blocks[i] == points).then_some(i)
    }

    pub fn has_repeated_blocks(&self) -> bool {
        self.blocks.windows(2).any(|w| w[0] == w[1])
    }

    /// Every block is incident with every point.
    pub fn is_trivial(&self) -> bool {
        !self.blocks.is_empty() && self.blocks.iter().all(|b| b.len() == self.v)
    }

    /// Blocks become points and points become blocks: dual block `x` is the set
    /// of (canonical) block indices containing point `x`.
    pub fn dual(&self) -> Result<Dual, DesignError> {
        let mut dual_blocks = vec![Vec::new(); self.v];
        for (j, block) in self.blocks.iter().enumerate() {
            for &x in block {
                dual_blocks[x].push(j);
            }
        }
        if let Some(x) = dual_blocks.iter().position(Vec::is_empty) {
            return Err(DesignError::PointInNoBlock(x));
        }
        Ok(Dual {
            structure: IncidenceStructure::new(self.blocks.len(), dual_blocks)?,
            repeated_blocks: self.has_repeated_blocks(),
        })
    }

    /// Replaces each block by its complementary point set.
    pub fn complement(&self) -> Result<IncidenceStructure, DesignError> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for block in &self.blocks {
            if block.len() == self.v {
                return Err(DesignError::FullBlock);
            }
            blocks.push((0..self.v).filter(|x| block.binary_search(x).is_err()).collect());
        }
        IncidenceStructure::new(self.v, blocks)
    }

    /// Exact diameter of the bipartite point/block incidence graph, by a
    /// breadth-first search from every vertex.
    pub fn incidence_graph_diameter(&self) -> Result<usize, DesignError> {
        let n = self.v + self.blocks.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (j, block) in self.blocks.iter().enumerate() {
            for &x in block {
                adj[x].push(self.v + j);
                adj[self.v + j].push(x);
            }
        }
        let mut diameter = 0;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            queue.push_back(s);
            let mut reached = 1;
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        diameter = diameter.max(dist[y]);
                        reached += 1;
                        queue.push_back(y);
                    }
                }
            }
            if reached != n {
                return Err(DesignError::Disconnected);
            }
        }
        Ok(diameter)
    }

    /// Occurrence-aware lookup from block contents to block indices.
    pub(crate) fn block_index_map(&self) -> HashMap<&[usize], Vec<usize>> {
        let mut map: HashMap<&[usize], Vec<usize>> = HashMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            map.entry(b.as_slice()).or_default().push(i);
        }
        map
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn fano() -> IncidenceStructure {
        // lines {1,2,4} + i (mod 7), written 0-based with 7 ≡ 0 relabelled to 6
        let lines = (0..7)
            .map(|i| [1usize, 2, 4].iter().map(|x| (x + i - 1) % 7).collect())
            .collect();
        IncidenceStructure::new(7, lines).unwrap()
    }

    #[test]
    fn canonical_order() {
        let s = IncidenceStructure::new(4, vec![vec![3, 1], vec![0, 2], vec![2, 0]]).unwrap();
        assert_eq!(s.blocks(), &[vec![0, 2], vec![0, 2], vec![1, 3]]);
        assert!(s.has_repeated_blocks());
        assert_eq!(s.flag_count(), 6);
        assert_eq!(s.find_block(&[1, 3]), Some(2));
        assert_eq!(s.find_block(&[1, 2]), None);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(IncidenceStructure::new(3, vec![vec![]]), Err(DesignError::EmptyBlock(0)));
        assert_eq!(
            IncidenceStructure::new(3, vec![vec![0, 3]]),
            Err(DesignError::PointOutOfRange { point: 3, v: 3 })
        );
        assert_eq!(
            IncidenceStructure::new(3, vec![vec![1, 1]]),
            Err(DesignError::RepeatedPointInBlock { block: 0, point: 1 })
        );
    }

    #[test]
    fn complement_is_an_involution() {
        let f = fano();
        assert_eq!(f.complement().unwrap().complement().unwrap(), f);
        let full = IncidenceStructure::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(full.complement(), Err(DesignError::FullBlock));
    }

    #[test]
    fn dual_of_fano_is_a_plane() {
        let d = fano().dual().unwrap();
        assert!(!d.repeated_blocks);
        assert_eq!(d.structure.b(), 7);
        assert!(d.structure.blocks().iter().all(|b| b.len() == 3));
        let lonely = IncidenceStructure::new(3, vec![vec![0, 1]]).unwrap();
        assert_eq!(lonely.dual().unwrap_err(), DesignError::PointInNoBlock(2));
    }

    #[test]
    fn diameters() {
        assert_eq!(fano().incidence_graph_diameter().unwrap(), 3);
        let trivial = IncidenceStructure::new(3, vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(trivial.incidence_graph_diameter().unwrap(), 2);
        let split = IncidenceStructure::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(split.incidence_graph_diameter(), Err(DesignError::Disconnected));
    }
}
