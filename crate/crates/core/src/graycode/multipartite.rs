//! Gray codes for complete multipartite graphs with `k` and `k + 1` colors.
//!
//! With `k` parts and `k` colors every part is monochromatic, so colorings
//! are permutations of the palette and a star-transposition code of
//! permutations gives the cycle.
//!
//! With `k + 1` colors, a coloring either leaves one color unused (a coloring
//! of `K_k`) or colors exactly one part `X_a` with two colors. The second kind
//! sits "between" two colorings of `K_k` that differ at `a`: for a step of a
//! base cycle through the 1-localized colorings of `K_k` that recolors `a`
//! from `b` to `c`, the colorings of `X_a` over `{b, c}` form a hypercube whose
//! corners are the two base colorings. The base cycle must step across every
//! such pair with `|X_a| ≥ 2`, since otherwise those colorings are never
//! listed. Such a base cycle exists when `k = 2`, when no part is larger
//! than one, and when exactly one part is with `k ≥ 4`; for `k = 3` the four
//! hexagons left after removing one vertex's recolorings can never be joined
//! into a single cycle.

use super::hypercube::{antipodal_gray_path, reflected_gray_cycle};
use super::permutation::star_transposition_code;
use super::search::searched_code;
use super::CyclicGrayCode;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::families::{complete_multipartite, part_labels};
use crate::solver::{hamiltonian_cycle, Budget};
use std::collections::HashMap;

/// Largest part count for which a base cycle through forced pairs is searched.
const MAX_FORCED_PARTS: usize = 5;

/// Cycle through all colorings with one color per part, swapping the colors
/// of the smallest part and one other part at each step. Localization is
/// the smallest plus the largest part size.
pub fn multipartite_code_k(parts: &[usize]) -> Result<CyclicGrayCode> {
    let k = parts.len();
    if k < 2 {
        return Err(Error::Argument("multipartite codes need at least two parts".into()));
    }
    let host = complete_multipartite(parts)?;
    let smallest = (0..k).min_by_key(|&p| (parts[p], p)).unwrap();
    // position 0 of a permutation is the smallest part; others follow in order
    let positions: Vec<usize> = std::iter::once(smallest).chain((0..k).filter(|&p| p != smallest)).collect();
    let mut slot = vec![0; k];
    for (pos, &p) in positions.iter().enumerate() {
        slot[p] = pos;
    }
    let labels = part_labels(parts);
    let perms = star_transposition_code(k)?;
    let sequence = perms
        .sequence
        .iter()
        .map(|perm| Coloring::new(labels.iter().map(|&p| perm[slot[p]]).collect()))
        .collect();
    Ok(CyclicGrayCode {
        host,
        k,
        j: parts[smallest] + parts.iter().max().unwrap(),
        sequence,
    })
}

/// Cycle through all `(k + 1)`-colorings, at localization 1 when every part
/// is odd and at localization 2 otherwise, built from a base cycle of `K_k`
/// that crosses every pair of base colorings differing on a part with at
/// least two vertices.
///
/// Such a base cycle exists for `k = 2`, for at most one large part with
/// `k ≥ 4`, and trivially when no part is large. Otherwise (two large parts
/// with `k ≥ 3`, or one with `k = 3`) the code is found by search at
/// localization 2; no code at localization 1 exists then even with all parts
/// odd, because at localization 1 the two-colored colorings of a large part
/// can only be traversed from one of their two base corners to the other.
pub fn multipartite_code_kplus1(parts: &[usize], budget: &Budget) -> Result<CyclicGrayCode> {
    let k = parts.len();
    if k < 2 {
        return Err(Error::Argument("multipartite codes need at least two parts".into()));
    }
    let host = complete_multipartite(parts)?;
    let all_odd = parts.iter().all(|m| m % 2 == 1);
    let large: Vec<usize> = (0..k).filter(|&p| parts[p] >= 2).collect();
    let base = if large.len() >= 2 && k >= 3 {
        None
    } else {
        base_cycle(k, large.first().copied(), budget)?
    };
    let Some(base) = base else {
        return searched_code(&host, k + 1, 2, budget);
    };
    let n = base.len();
    // step i goes from base[i] to base[i+1] and recolors part a[i]
    let mut steps = Vec::with_capacity(n);
    for i in 0..n {
        let (p, q) = (&base[i], &base[(i + 1) % n]);
        let moved: Vec<usize> = (1..=k).filter(|&t| p[t] != q[t]).collect();
        if moved.len() != 1 || q[moved[0]] != p[0] {
            return Err(Error::Internal("base cycle step is not a single recoloring".into()));
        }
        steps.push(Step { part: moved[0] - 1, from: p[moved[0]], to: q[moved[0]] });
    }
    for i in 0..n {
        if steps[i].part == steps[(i + 1) % n].part {
            return Err(Error::Internal("consecutive base steps recolor the same vertex".into()));
        }
    }
    let labels = part_labels(parts);
    let starts: Vec<usize> = (0..k).map(|p| labels.iter().position(|&l| l == p).unwrap()).collect();
    let place = |i: usize, strings: &[Vec<u8>]| -> Vec<Coloring> {
        let p = &base[i];
        let a = steps[i].part;
        strings
            .iter()
            .map(|s| {
                let mut colors: Vec<u8> = labels.iter().map(|&l| p[l + 1]).collect();
                colors[starts[a]..starts[a] + parts[a]].copy_from_slice(s);
                Coloring::new(colors)
            })
            .collect()
    };
    let sequence = if all_odd {
        let mut out = Vec::new();
        for i in 0..n {
            let st = steps[i];
            let path = antipodal_gray_path(parts[st.part], st.from, st.to)?.sequence;
            out.extend(place(i, &path[..path.len() - 1]));
        }
        out
    } else {
        two_pass(parts, &steps, &place)?
    };
    Ok(CyclicGrayCode { host, k: k + 1, j: if all_odd { 1 } else { 2 }, sequence })
}

#[derive(Clone, Copy, Debug)]
struct Step {
    part: usize,
    from: u8,
    to: u8,
}

/// The listing for some even part: first a pass over the base cycle taking,
/// for each step, the hypercube cycle from the old corner up to just before
/// the new corner; then a second pass taking the rest of each hypercube cycle
/// backwards, without the new corner. Seams of the second pass recolor one
/// vertex of each of two consecutive parts.
///
/// A part of size one has no two-colored colorings, so its step contributes
/// only the base coloring, placed in one of the two passes. Within a run of
/// such steps the passes alternate, the last one of the run going to the
/// second pass, so that every skipped slot is followed by a slot starting at
/// its base coloring.
fn two_pass(
    parts: &[usize],
    steps: &[Step],
    place: &dyn Fn(usize, &[Vec<u8>]) -> Vec<Coloring>,
) -> Result<Vec<Coloring>> {
    let n = steps.len();
    // rotate so the last step is across a part of size at least two
    let last = (0..n)
        .find(|&i| parts[steps[i].part] >= 2)
        .ok_or_else(|| Error::Internal("no even part among the steps".into()))?;
    let order: Vec<usize> = (0..n).map(|t| (last + 1 + t) % n).collect();
    let mut in_first = vec![true; n];
    let mut t = n;
    while t > 0 {
        t -= 1;
        if parts[steps[order[t]].part] >= 2 {
            continue;
        }
        // walk back over the run ending at t
        let mut second = true;
        loop {
            in_first[order[t]] = !second;
            second = !second;
            if t == 0 || parts[steps[order[t - 1]].part] >= 2 {
                break;
            }
            t -= 1;
        }
    }
    let mut first_pass = Vec::new();
    let mut second_pass = Vec::new();
    for &i in &order {
        let st = steps[i];
        let m = parts[st.part];
        if m == 1 {
            let single = place(i, &[vec![st.from]]);
            if in_first[i] {
                first_pass.extend(single);
            } else {
                second_pass.extend(single);
            }
            continue;
        }
        let cube = reflected_gray_cycle(m, st.from, st.to)?.sequence;
        let corner = cube.iter().position(|s| s.iter().all(|&x| x == st.to)).unwrap();
        first_pass.extend(place(i, &cube[..corner]));
        let back: Vec<Vec<u8>> = cube[corner + 1..].iter().rev().cloned().collect();
        second_pass.extend(place(i, &back));
    }
    first_pass.extend(second_pass);
    Ok(first_pass)
}

/// A cycle through the 1-localized `(k + 1)`-colorings of `K_k`, as
/// arrangements `p` with `p[0]` the unused color and `p[t]` the color of
/// vertex `t - 1`. When `forced` names a vertex, the cycle recolors it at
/// every other step, so it crosses every pair of colorings differing there.
/// `None` when no such cycle exists.
fn base_cycle(k: usize, forced: Option<usize>, budget: &Budget) -> Result<Option<Vec<Vec<u8>>>> {
    let star = star_transposition_code(k + 1)?.sequence;
    let Some(a) = forced.filter(|_| k >= 3) else {
        return Ok(Some(star));
    };
    if k > MAX_FORCED_PARTS {
        return Err(Error::Unsupported(format!(
            "base cycles with a forced vertex are searched for at most {MAX_FORCED_PARTS} parts"
        )));
    }
    // every forced pair gets a middle node of degree two
    let index: HashMap<&[u8], usize> = star.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = star.len();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let partner = |p: &[u8], t: usize| -> usize {
        let mut q = p.to_vec();
        q.swap(0, t);
        index[q.as_slice()]
    };
    for (i, p) in star.iter().enumerate() {
        for t in 1..=k {
            let j = partner(p, t);
            if t == a + 1 {
                if i < j {
                    let mid = adj.len() as u32;
                    adj.push(vec![i as u32, j as u32]);
                    adj[i].push(mid);
                    adj[j].push(mid);
                }
            } else {
                adj[i].push(j as u32);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let verdict = hamiltonian_cycle(&adj, budget)?;
    Ok(verdict
        .cycle
        .map(|cycle| cycle.into_iter().filter(|&v| v < n).map(|v| star[v].clone()).collect()))
}
