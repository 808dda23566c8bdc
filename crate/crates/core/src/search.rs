//! Budgeted searches over the move graph.
//!
//! Both searches are semi-decision procedures: running out of budget yields
//! [`SearchOutcome::Unknown`], which says nothing about the word.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use rayon::prelude::*;

use crate::moves::{enumerate_moves, BurnsideParams, ElementaryMove, MoveSequence, Step, Witness};
use crate::word::FreeWord;

/// Limits on a search: move count, intermediate word length and expanded states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    pub max_moves: usize,
    pub max_len: usize,
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_moves: 8,
            max_len: 64,
            max_states: 200_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exhausted {
    /// Every word within `max_moves` (and `max_len`) was explored.
    Moves,
    States,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Unknown { states: usize, exhausted: Exhausted },
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            SearchOutcome::Unknown { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

struct Node {
    word: FreeWord,
    depth: usize,
    parent: Option<(usize, Step)>,
}

fn witness_for(mv: &ElementaryMove) -> Witness {
    Witness {
        conjugator: mv.factorization.prefix(),
        base: mv.factorization.base.clone(),
        power: -(mv.n as i64),
    }
}

fn step_for(mv: ElementaryMove) -> Step {
    let witness = witness_for(&mv);
    Step { mv, witness }
}

fn rebuild(nodes: &[Node], mut index: usize) -> MoveSequence {
    let end = nodes[index].word.clone();
    let mut steps = Vec::new();
    while let Some((parent, step)) = &nodes[index].parent {
        steps.push(step.clone());
        index = *parent;
    }
    steps.reverse();
    MoveSequence {
        start: nodes[index].word.clone(),
        steps,
        end,
    }
}

/// Looks for a sequence of moves sending `w` to the empty word.
///
/// Iterative deepening on the number of moves; inside each bound, nodes are
/// expanded best-first by `(|word|, depth, word)`, and a word is re-expanded
/// only if reached at a smaller depth. The returned sequence therefore uses the
/// fewest moves possible within the length bound, and is deterministic.
pub fn search_trivialization(
    w: &FreeWord,
    params: &BurnsideParams,
    budget: SearchBudget,
) -> SearchOutcome<MoveSequence> {
    if w.is_empty() {
        return SearchOutcome::Found(MoveSequence::empty(w.clone()));
    }
    let mut states = 0usize;
    let mut successors: HashMap<FreeWord, Vec<ElementaryMove>> = HashMap::new();
    for limit in 1..=budget.max_moves {
        let mut nodes = vec![Node {
            word: w.clone(),
            depth: 0,
            parent: None,
        }];
        let mut best_depth: HashMap<FreeWord, usize> = HashMap::from([(w.clone(), 0)]);
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((w.len(), 0usize, w.clone(), 0usize)));
        let mut truncated = false;
        while let Some(Reverse((_, depth, word, index))) = heap.pop() {
            if best_depth.get(&word).is_some_and(|&d| d < depth) {
                continue;
            }
            if word.is_empty() {
                return SearchOutcome::Found(rebuild(&nodes, index));
            }
            if depth == limit {
                truncated = true;
                continue;
            }
            if states >= budget.max_states {
                return SearchOutcome::Unknown {
                    states,
                    exhausted: Exhausted::States,
                };
            }
            states += 1;
            let moves = successors
                .entry(word.clone())
                .or_insert_with(|| enumerate_moves(&word, params))
                .clone();
            for mv in moves {
                if mv.result.len() > budget.max_len {
                    continue;
                }
                let next_depth = depth + 1;
                if best_depth.get(&mv.result).is_some_and(|&d| d <= next_depth) {
                    continue;
                }
                best_depth.insert(mv.result.clone(), next_depth);
                let next = nodes.len();
                let key = (mv.result.len(), next_depth, mv.result.clone(), next);
                nodes.push(Node {
                    word: mv.result.clone(),
                    depth: next_depth,
                    parent: Some((index, step_for(mv))),
                });
                heap.push(Reverse(key));
            }
        }
        if !truncated {
            // the reachable part of the move graph is exhausted
            break;
        }
    }
    SearchOutcome::Unknown {
        states,
        exhausted: Exhausted::Moves,
    }
}

/// One side of the bidirectional search: visited words with their depth and
/// the move that reached them.
struct Side {
    nodes: Vec<Node>,
    index: BTreeMap<FreeWord, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(start: &FreeWord) -> Side {
        Side {
            nodes: vec![Node {
                word: start.clone(),
                depth: 0,
                parent: None,
            }],
            index: BTreeMap::from([(start.clone(), 0)]),
            frontier: vec![0],
            depth: 0,
        }
    }

    /// Expands the whole frontier by one layer. Successors are computed in
    /// parallel and merged in frontier order, so the result does not depend on
    /// scheduling. Returns the number of states expanded.
    fn expand(&mut self, params: &BurnsideParams, max_len: usize) -> usize {
        let expanded: Vec<Vec<ElementaryMove>> = self
            .frontier
            .par_iter()
            .map(|&i| enumerate_moves(&self.nodes[i].word, params))
            .collect();
        let mut next = Vec::new();
        for (&parent, moves) in self.frontier.iter().zip(expanded) {
            for mv in moves {
                if mv.result.len() > max_len || self.index.contains_key(&mv.result) {
                    continue;
                }
                let i = self.nodes.len();
                self.index.insert(mv.result.clone(), i);
                self.nodes.push(Node {
                    word: mv.result.clone(),
                    depth: self.depth + 1,
                    parent: Some((parent, step_for(mv))),
                });
                next.push(i);
            }
        }
        let count = self.frontier.len();
        self.frontier = next;
        self.depth += 1;
        count
    }
}

/// Looks for two move sequences from `g` and `h` that end at the same word.
///
/// The move graph is directed, so both sequences run forward and meet at a
/// common descendant. The two sides are grown one breadth-first layer at a
/// time, always the shallower side first (ties: smaller frontier, then `g`).
/// A common word not yet seen must lie deeper than some side's current layer,
/// so once the best meeting found costs at most `1 + min depth` it is optimal.
/// The result minimizes the total number of moves (then the meeting word in
/// shortlex order) among meetings within `max_moves` total moves.
pub fn search_identification(
    g: &FreeWord,
    h: &FreeWord,
    params: &BurnsideParams,
    budget: SearchBudget,
) -> SearchOutcome<(MoveSequence, MoveSequence)> {
    if g.rank() != h.rank() {
        return SearchOutcome::Unknown {
            states: 0,
            exhausted: Exhausted::Moves,
        };
    }
    if g == h {
        return SearchOutcome::Found((MoveSequence::empty(g.clone()), MoveSequence::empty(h.clone())));
    }
    let mut sides = [Side::new(g), Side::new(h)];
    let mut states = 0usize;
    // (total, meeting word, node index on g's side, node index on h's side)
    let mut best: Option<(usize, FreeWord, usize, usize)> = None;
    let finish = |sides: &[Side; 2], best: Option<(usize, FreeWord, usize, usize)>, states, exhausted| match best {
        Some((_, _, li, ri)) => SearchOutcome::Found((rebuild(&sides[0].nodes, li), rebuild(&sides[1].nodes, ri))),
        None => SearchOutcome::Unknown { states, exhausted },
    };
    loop {
        // cheapest total an undiscovered meeting could have
        let lower_bound = sides
            .iter()
            .filter(|s| !s.frontier.is_empty())
            .map(|s| s.depth + 1)
            .min();
        let Some(lower_bound) = lower_bound else {
            return finish(&sides, best, states, Exhausted::Moves);
        };
        if best.as_ref().is_some_and(|b| b.0 <= lower_bound) || lower_bound > budget.max_moves {
            return finish(&sides, best, states, Exhausted::Moves);
        }
        let active = (0..2)
            .filter(|&i| !sides[i].frontier.is_empty())
            .min_by_key(|&i| (sides[i].depth, sides[i].frontier.len(), i))
            .expect("some frontier is non-empty");
        if states + sides[active].frontier.len() > budget.max_states {
            return finish(&sides, best, states, Exhausted::States);
        }
        states += sides[active].expand(params, budget.max_len);
        let (mine, other) = if active == 0 {
            let [a, b] = &sides;
            (a, b)
        } else {
            let [a, b] = &sides;
            (b, a)
        };
        for &i in &mine.frontier {
            let word = &mine.nodes[i].word;
            let Some(&j) = other.index.get(word) else {
                continue;
            };
            let total = mine.depth + other.nodes[j].depth;
            if total > budget.max_moves {
                continue;
            }
            let better = match &best {
                None => true,
                Some((t, w, _, _)) => total.cmp(t).then_with(|| word.shortlex_cmp(w)).is_lt(),
            };
            if better {
                let (li, ri) = if active == 0 { (i, j) } else { (j, i) };
                best = Some((total, word.clone(), li, ri));
            }
        }
    }
}
