//! Permutation analysis of complete coset tables: subgroup normality and
//! identification of small quotient groups by element-order statistics.

use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;

use super::coset::{CosetTable, TableStatus};
use super::Error;

/// Tests whether the enumerated subgroup is normal.
///
/// The generator actions make the cosets a transitive permutation group
/// whose order is at least the index; the subgroup is normal exactly when
/// the order equals the index, so the closure walk aborts as soon as it
/// exceeds the index.
pub fn is_normal(t: &CosetTable) -> Result<bool, Error> {
    let (rows, n) = complete_rows(t)?;
    let gens = generator_actions(t, rows);
    Ok(closure(&gens, n, n).is_some())
}

/// Names the quotient by a normal enumerated subgroup.
///
/// Groups of order up to 15 are pinned down by their order and element
/// order multiset; at order 16 only the cyclic and elementary abelian
/// groups are named. Everything else falls back to `order{N}`.
pub fn quotient_identify(t: &CosetTable) -> Result<String, Error> {
    let (rows, n) = complete_rows(t)?;
    let gens = generator_actions(t, rows);
    let elements = closure(&gens, n, n).ok_or(Error::NotNormal)?;
    let mut orders: Vec<usize> = elements.iter().map(|p| permutation_order(p)).collect();
    orders.sort_unstable();
    Ok(tag_for(n, &orders))
}

fn complete_rows(t: &CosetTable) -> Result<(&[Vec<u32>], usize), Error> {
    match t.status() {
        TableStatus::Complete { rows } => Ok((rows, rows.len())),
        TableStatus::Overflowed { bound } => Err(Error::Overflowed(*bound)),
    }
}

fn generator_actions(t: &CosetTable, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    (0..t.generators().len()).map(|i| rows.iter().map(|r| r[2 * i]).collect()).collect()
}

/// Breadth first closure of the generated permutation group, aborting with
/// `None` once the element count exceeds `cap`.
fn closure(gens: &[Vec<u32>], n: usize, cap: usize) -> Option<Vec<Vec<u32>>> {
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<u32> = p.iter().map(|&x| g[x as usize]).collect();
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(q);
            }
        }
    }
    Some(seen.into_iter().collect())
}

/// Order of a permutation: the lcm of its cycle lengths.
fn permutation_order(p: &[u32]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut order = 1usize;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

fn tag_for(n: usize, orders: &[usize]) -> String {
    let count = |o: usize| orders.iter().filter(|&&x| x == o).count();
    let named = match n {
        1 => "trivial",
        // Orders with a unique group.
        2 | 3 | 5 | 7 | 11 | 13 | 15 => return format!("Z{n}"),
        4 => {
            if orders.contains(&4) {
                "Z4"
            } else {
                "Z2xZ2"
            }
        }
        6 => {
            if orders.contains(&6) {
                "Z6"
            } else {
                "S3"
            }
        }
        8 => {
            if orders.contains(&8) {
                "Z8"
            } else {
                match count(4) {
                    0 => "Z2xZ2xZ2",
                    2 => "D4",
                    4 => "Z4xZ2",
                    6 => "Q8",
                    _ => return format!("order{n}"),
                }
            }
        }
        9 => {
            if orders.contains(&9) {
                "Z9"
            } else {
                "Z3xZ3"
            }
        }
        10 => {
            if orders.contains(&10) {
                "Z10"
            } else {
                "D5"
            }
        }
        12 => {
            if orders.contains(&12) {
                "Z12"
            } else if orders.contains(&4) {
                "Dic3"
            } else {
                match (count(2), count(6)) {
                    (3, 6) => "Z6xZ2",
                    (7, 2) => "D6",
                    (3, 0) => "A4",
                    _ => return format!("order{n}"),
                }
            }
        }
        14 => {
            if orders.contains(&14) {
                "Z14"
            } else {
                "D7"
            }
        }
        // At order 16 the element order multiset stops separating groups
        // (Z8xZ2 matches a nonabelian group, Z4xZ4 matches two others), so
        // only the two unmistakable shapes get names.
        16 => {
            if orders.contains(&16) {
                "Z16"
            } else if count(2) == 15 {
                "Z2xZ2xZ2xZ2"
            } else {
                return format!("order{n}");
            }
        }
        _ => return format!("order{n}"),
    };
    named.to_string()
}
