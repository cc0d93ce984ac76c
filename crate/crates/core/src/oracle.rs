//! Brute-force oracles that verify the generating series independently:
//! exhaustive partition enumeration, and breadth-first search over Cayley
//! graphs of small symmetric/alternating groups to recover conjugacy growth
//! counts from first principles.
//!
//! The oracles exist for correctness, not scale: partitions are enumerated
//! only up to n = 60, groups only up to degree 8 (symmetric) and 9
//! (alternating), and anything beyond is a hard error.

use std::collections::VecDeque;

use crate::error::{Error, Result};

const PARTITION_BUDGET: u64 = 60;
const SYMMETRIC_DEGREE_BUDGET: usize = 8;
const ALTERNATING_DEGREE_BUDGET: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionPredicate {
    All,
    EvenPartCount,
}

/// Count partitions of `n` by exhaustive enumeration (depth-first over
/// weakly decreasing part lists), optionally filtered to those with an even
/// number of parts.  The empty partition of 0 has zero parts, which is even.
pub fn oracle_partition_count(n: u64, predicate: PartitionPredicate) -> Result<u64> {
    if n > PARTITION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "partition enumeration capped at n = {}, asked for {}",
            PARTITION_BUDGET, n
        )));
    }
    fn rec(remaining: u64, max_part: u64, parts_so_far: u64, predicate: PartitionPredicate) -> u64 {
        if remaining == 0 {
            return match predicate {
                PartitionPredicate::All => 1,
                PartitionPredicate::EvenPartCount => u64::from(parts_so_far % 2 == 0),
            };
        }
        let mut count = 0;
        for part in (1..=remaining.min(max_part)).rev() {
            count += rec(remaining - part, part, parts_so_far + 1, predicate);
        }
        count
    }
    Ok(rec(n, n.max(1), 0, predicate))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFlavor {
    Symmetric,
    Alternating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSet {
    /// Adjacent transpositions `(i, i+1)`.
    Coxeter,
    /// Every transposition.
    AllTranspositions,
    /// Consecutive 3-cycles `(i, i+1, i+2)` (inverses are added for the BFS).
    Consecutive3Cycles,
    /// Every 3-cycle.
    All3Cycles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub flavor: GroupFlavor,
    pub generators: GeneratorSet,
}

type Perm = Vec<u8>;

fn identity(m: usize) -> Perm {
    (0..m as u8).collect()
}

/// left * right, acting as (left*right)(x) = left(right(x)).
fn compose(left: &Perm, right: &Perm) -> Perm {
    right.iter().map(|&x| left[x as usize]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

fn from_cycle(m: usize, cycle: &[usize]) -> Perm {
    let mut p = identity(m);
    for i in 0..cycle.len() {
        p[cycle[i]] = cycle[(i + 1) % cycle.len()] as u8;
    }
    p
}

/// Rank of a permutation among all m! permutations (Lehmer code).
fn rank(p: &Perm) -> usize {
    let m = p.len();
    let mut r = 0usize;
    for i in 0..m {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        r = r * (m - i) + smaller;
    }
    r
}

fn factorial(m: usize) -> usize {
    (1..=m).product()
}

fn generator_list(spec: &GroupSpec) -> Result<Vec<Perm>> {
    let m = spec.degree;
    let legal = match (spec.flavor, spec.generators) {
        (GroupFlavor::Symmetric, GeneratorSet::Coxeter)
        | (GroupFlavor::Symmetric, GeneratorSet::AllTranspositions)
        | (GroupFlavor::Alternating, GeneratorSet::Consecutive3Cycles)
        | (GroupFlavor::Alternating, GeneratorSet::All3Cycles) => true,
        _ => false,
    };
    if !legal {
        return Err(Error::InvalidGenerators);
    }
    let mut gens: Vec<Perm> = Vec::new();
    match spec.generators {
        GeneratorSet::Coxeter => {
            for i in 0..m.saturating_sub(1) {
                gens.push(from_cycle(m, &[i, i + 1]));
            }
        }
        GeneratorSet::AllTranspositions => {
            for i in 0..m {
                for j in i + 1..m {
                    gens.push(from_cycle(m, &[i, j]));
                }
            }
        }
        GeneratorSet::Consecutive3Cycles => {
            for i in 0..m.saturating_sub(2) {
                gens.push(from_cycle(m, &[i, i + 1, i + 2]));
            }
        }
        GeneratorSet::All3Cycles => {
            for a in 0..m {
                for b in a + 1..m {
                    for c in b + 1..m {
                        gens.push(from_cycle(m, &[a, b, c]));
                        gens.push(from_cycle(m, &[a, c, b]));
                    }
                }
            }
        }
    }
    // word length counts letters from S together with their inverses
    let inverses: Vec<Perm> = gens.iter().map(inverse).collect();
    for inv in inverses {
        if !gens.contains(&inv) {
            gens.push(inv);
        }
    }
    Ok(gens)
}

/// Conjugacy growth counts `gamma(0..=n_max)` of a small finite group,
/// computed from scratch: BFS over the Cayley graph gives the word length of
/// every element, conjugation orbits give the classes, and the class length
/// is the minimum word length over the class.
pub fn oracle_bfs_conjugacy_growth(spec: &GroupSpec, n_max: usize) -> Result<Vec<u64>> {
    let m = spec.degree;
    let budget = match spec.flavor {
        GroupFlavor::Symmetric => SYMMETRIC_DEGREE_BUDGET,
        GroupFlavor::Alternating => ALTERNATING_DEGREE_BUDGET,
    };
    if m < 3 || m > budget {
        return Err(Error::BudgetExceeded(format!(
            "degree {} outside supported range 3..={}",
            m, budget
        )));
    }
    let gens = generator_list(spec)?;
    let total = factorial(m);

    // BFS from the identity
    let mut dist: Vec<i32> = vec![-1; total];
    let ident = identity(m);
    dist[rank(&ident)] = 0;
    let mut queue: VecDeque<Perm> = VecDeque::new();
    queue.push_back(ident);
    while let Some(u) = queue.pop_front() {
        let du = dist[rank(&u)];
        for g in &gens {
            let v = compose(&u, g);
            let rv = rank(&v);
            if dist[rv] < 0 {
                dist[rv] = du + 1;
                queue.push_back(v);
            }
        }
    }

    // conjugation orbits under a generating pair of the group
    let conjugators: Vec<Perm> = match spec.flavor {
        GroupFlavor::Symmetric => vec![
            from_cycle(m, &[0, 1]),
            from_cycle(m, &(0..m).collect::<Vec<_>>()),
        ],
        GroupFlavor::Alternating => {
            let long: Vec<usize> = if m % 2 == 1 {
                (0..m).collect()
            } else {
                (1..m).collect()
            };
            vec![from_cycle(m, &[0, 1, 2]), from_cycle(m, &long)]
        }
    };
    let conj_inv: Vec<Perm> = conjugators.iter().map(inverse).collect();

    let mut gamma = vec![0u64; n_max + 1];
    let mut class_seen = vec![false; total];
    let mut stack: Vec<Perm> = Vec::new();
    for start in 0..total {
        if dist[start] < 0 || class_seen[start] {
            continue;
        }
        // walk the conjugacy class of the element ranked `start`
        let rep = unrank(start, m);
        let mut min_len = dist[start];
        class_seen[start] = true;
        stack.push(rep);
        while let Some(u) = stack.pop() {
            for (g, gi) in conjugators.iter().zip(conj_inv.iter()) {
                let v = compose(&compose(g, &u), gi);
                let rv = rank(&v);
                if !class_seen[rv] {
                    class_seen[rv] = true;
                    min_len = min_len.min(dist[rv]);
                    stack.push(v);
                }
            }
        }
        let min_len = min_len as usize;
        if min_len <= n_max {
            gamma[min_len] += 1;
        }
    }
    Ok(gamma)
}

/// Inverse of [`rank`].
fn unrank(mut r: usize, m: usize) -> Perm {
    let mut digits = vec![0usize; m];
    for i in (0..m).rev() {
        let base = m - i;
        digits[i] = r % base;
        r /= base;
    }
    let mut pool: Vec<u8> = (0..m as u8).collect();
    let mut p = Vec::with_capacity(m);
    for &d in &digits {
        p.push(pool.remove(d));
    }
    p
}
