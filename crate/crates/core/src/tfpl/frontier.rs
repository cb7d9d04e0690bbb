use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::model::{EdgeKind, TriangleModel, VertexRole};
use super::orient::{components, paths_match};
use super::partners;
use super::search::{boundary_words, for_each_edge_set, BoundarySpec};
use crate::words::BinaryWord;

/// What a sweep keeps track of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    /// Plain TFPLs only; partial states that cannot become well oriented are
    /// dropped early, which keeps the sweep small.
    PlainOnly,
    PlainAndOriented,
}

/// Plain and oriented counts for one bottom word, keyed by `(sigma, tau)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCounts {
    mode: SweepMode,
    counts: HashMap<(Vec<u8>, Vec<u8>), (BigInt, BigInt)>,
}

impl BoundaryCounts {
    fn add(&mut self, key: (Vec<u8>, Vec<u8>), plain: &BigInt, oriented: &BigInt) {
        let slot = self.counts.entry(key).or_default();
        slot.0 += plain;
        slot.1 += oriented;
    }

    pub fn plain(&self, sigma: &BinaryWord, tau: &BinaryWord) -> BigInt {
        self.get(sigma, tau).0
    }

    /// `None` when the sweep ran in [`SweepMode::PlainOnly`].
    pub fn oriented(&self, sigma: &BinaryWord, tau: &BinaryWord) -> Option<BigInt> {
        (self.mode == SweepMode::PlainAndOriented).then(|| self.get(sigma, tau).1)
    }

    fn get(&self, sigma: &BinaryWord, tau: &BinaryWord) -> (BigInt, BigInt) {
        self.counts
            .get(&(sigma.letters().to_vec(), tau.letters().to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero entries as `(sigma, tau, plain, oriented)`.
    pub fn entries(&self) -> impl Iterator<Item = (BinaryWord, BinaryWord, &BigInt, &BigInt)> {
        self.counts
            .iter()
            .filter(|(_, (p, o))| !p.is_zero() || !o.is_zero())
            .map(|((s, t), (p, o))| {
                (
                    BinaryWord::from_bits(s.iter().copied()),
                    BinaryWord::from_bits(t.iter().copied()),
                    p,
                    o,
                )
            })
    }
}

/// Reference implementation over complete edge sets.
pub fn count_by_backtracking(
    model: &TriangleModel,
    pi: &BinaryWord,
    sigma: Option<&BinaryWord>,
    tau: Option<&BinaryWord>,
) -> BoundaryCounts {
    let letters = pi.letters();
    let partner = partners(letters);
    let spec = BoundarySpec {
        sigma: sigma.map(|s| s.letters()),
        tau: tau.map(|t| t.letters()),
    };
    let mut out = BoundaryCounts {
        mode: SweepMode::PlainAndOriented,
        counts: HashMap::new(),
    };
    let one = BigInt::from(1);
    for_each_edge_set(model, spec, |present| {
        let comps = components(model, present);
        let mut oriented = 1u64;
        let mut canonical = true;
        for c in &comps {
            oriented *= c.orientations(model, letters).len() as u64;
            canonical &= c.canonical_ok(model, letters);
        }
        let plain = canonical && partner.as_ref().is_some_and(|p| paths_match(&comps, p));
        if oriented == 0 && !plain {
            return;
        }
        let plain = if plain { one.clone() } else { BigInt::zero() };
        out.add(
            boundary_words(model, present),
            &plain,
            &BigInt::from(oriented),
        );
    });
    out
}

// ---------------------------------------------------------------------------
// Line-by-line sweep.
//
// Vertices are processed in model order (diagonal by diagonal, bottom to top
// within a diagonal). The frontier is the list of edges whose lower end has
// been processed and whose upper end has not; it depends only on the step,
// so a state is just one code per frontier edge plus the boundary letters
// read so far. Each present frontier edge carries its direction and a tag:
// the terminal at the far end of its strand, or a pair id shared with the
// frontier edge at the other end of the same strand.
//
// Orientation is local, so oriented configurations are counted exactly. A
// configuration is well oriented when its paths pair the boundary as `pi`
// does (left sources with right sinks) and its loops run clockwise. A loop
// is closed at its last vertex in sweep order, which lies on its highest
// diagonal and therefore on a convex corner: the loop is clockwise iff the
// horizontal edge entering that corner points into it.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tag {
    Left,
    Right,
    Bottom(usize),
    Pair(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Strand {
    up: bool,
    tag: Tag,
}

type Slot = Option<Strand>;

/// Largest triangle the sweep handles: boundary letters are kept as `u32`
/// bit sets of length `2n`.
pub const MAX_SWEEP_SIZE: usize = 16;

/// One byte per frontier slot. Codes: 0 absent, otherwise
/// `1 + dir + 2 * tag`, tags numbered Left = 0, Right = 1, Bottom(i) = 1 + i,
/// Pair(id) = 2 + 2n + id. At most `2n` bottom tags and one pair id per two
/// slots keep this below 256 up to [`MAX_SWEEP_SIZE`].
fn encode(slots: &[Slot], n: usize) -> Box<[u8]> {
    slots
        .iter()
        .map(|s| match s {
            None => 0,
            Some(st) => {
                let tag = match st.tag {
                    Tag::Left => 0,
                    Tag::Right => 1,
                    Tag::Bottom(i) => 1 + i,
                    Tag::Pair(id) => 2 + 2 * n + id,
                };
                u8::try_from(1 + usize::from(!st.up) + 2 * tag).expect("slot code fits a byte")
            }
        })
        .collect()
}

fn decode(packed: &[u8], n: usize) -> Vec<Slot> {
    packed
        .iter()
        .map(|&c| {
            if c == 0 {
                return None;
            }
            let c = usize::from(c) - 1;
            let up = c.is_multiple_of(2);
            let tag = match c / 2 {
                0 => Tag::Left,
                1 => Tag::Right,
                t if t <= 1 + 2 * n => Tag::Bottom(t - 1),
                t => Tag::Pair(t - 2 - 2 * n),
            };
            Some(Strand { up, tag })
        })
        .collect()
}

/// Renumbers pair ids by first appearance so equal states hash equally.
fn normalize(slots: &mut [Slot]) {
    let mut map: Vec<(usize, usize)> = Vec::new();
    for s in slots.iter_mut().flatten() {
        if let Tag::Pair(id) = s.tag {
            let next = map.len();
            let new = match map.iter().find(|(old, _)| *old == id) {
                Some(&(_, new)) => new,
                None => {
                    map.push((id, next));
                    next
                }
            };
            s.tag = Tag::Pair(new);
        }
    }
}

fn fresh_pair_id(slots: &[Slot]) -> usize {
    slots
        .iter()
        .flatten()
        .filter_map(|s| match s.tag {
            Tag::Pair(id) => Some(id + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}

/// Whether two terminals may be the ends of one path of a plain TFPL.
fn ends_match(a: Tag, b: Tag, partner: Option<&[usize]>) -> bool {
    match (a, b) {
        (Tag::Left, Tag::Right) | (Tag::Right, Tag::Left) => true,
        (Tag::Bottom(i), Tag::Bottom(j)) => partner.is_some_and(|p| p[i - 1] == j),
        _ => false,
    }
}

/// Joins the strands tagged `a` and `b` (both already removed from `slots`).
/// Returns whether the plain conditions still hold; `loop_clockwise` is
/// consulted only if the join closes a loop.
fn join(
    slots: &mut [Slot],
    a: Tag,
    b: Tag,
    loop_clockwise: bool,
    partner: Option<&[usize]>,
) -> bool {
    let relabel = |slots: &mut [Slot], id: usize, to: Tag| {
        for s in slots.iter_mut().flatten() {
            if s.tag == Tag::Pair(id) {
                s.tag = to;
            }
        }
    };
    match (a, b) {
        (Tag::Pair(x), Tag::Pair(y)) if x == y => loop_clockwise,
        (Tag::Pair(x), Tag::Pair(y)) => {
            relabel(slots, y, Tag::Pair(x));
            true
        }
        (Tag::Pair(x), t) | (t, Tag::Pair(x)) => {
            relabel(slots, x, t);
            true
        }
        (s, t) => ends_match(s, t, partner),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Letters {
    sigma: u32,
    tau: u32,
}

type Counts = (u128, u128);

/// Counts TFPLs with bottom word `pi`, for every left and right boundary at
/// once, or only for the given ones.
pub fn count_by_boundary(
    model: &TriangleModel,
    pi: &BinaryWord,
    sigma: Option<&BinaryWord>,
    tau: Option<&BinaryWord>,
    mode: SweepMode,
) -> BoundaryCounts {
    let n = model.n();
    assert!(n <= MAX_SWEEP_SIZE, "sweep supports n <= {MAX_SWEEP_SIZE}");
    let pi = pi.letters();
    let partner = partners(pi);
    let partner = partner.as_deref();

    // Bottom half-edges start on the frontier.
    let mut frontier: Vec<usize> = (1..=2 * n).map(|i| model.external_edge(i)).collect();
    let start: Vec<Slot> = (1..=2 * n)
        .map(|i| {
            Some(Strand {
                up: pi[i - 1] == 0,
                tag: Tag::Bottom(i),
            })
        })
        .collect();
    let mut states: HashMap<(Box<[u8]>, Letters), Counts> = HashMap::new();
    states.insert((encode(&start, n), Letters { sigma: 0, tau: 0 }), (1, 1));

    for v in 0..model.vertex_count() {
        let role = model.role(v);
        let in_pos: Vec<usize> = (0..frontier.len())
            .filter(|&k| model.edge(frontier[k]).upper == v)
            .collect();
        let outs: Vec<usize> = model
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| model.edge(e).lower == Some(v))
            .collect();
        let kept: Vec<usize> = (0..frontier.len())
            .filter(|k| !in_pos.contains(k))
            .collect();

        let mut next: HashMap<(Box<[u8]>, Letters), Counts> = HashMap::with_capacity(states.len());
        for ((codes, letters), (plain, oriented)) in states {
            let slots = decode(&codes, n);
            let ins: Vec<(usize, Strand)> = in_pos
                .iter()
                .filter_map(|&k| slots[k].map(|s| (frontier[k], s)))
                .collect();
            let base: Vec<Slot> = kept.iter().map(|&k| slots[k]).collect();
            let ins_into = ins.iter().filter(|(_, s)| s.up).count();
            // Each out edge: absent, up or down; forced edges restrict this.
            let options: Vec<Vec<Option<bool>>> = outs
                .iter()
                .map(|&e| match model.forced_direction(e, pi) {
                    Some(d) => vec![None, Some(d == super::Dir::Up)],
                    None => vec![None, Some(true), Some(false)],
                })
                .collect();
            let mut choice = vec![0usize; outs.len()];
            loop {
                let picked: Vec<Option<bool>> =
                    (0..outs.len()).map(|k| options[k][choice[k]]).collect();
                // Cheap degree filter before the full rule.
                let plausible = role != VertexRole::Internal || {
                    let present = picked.iter().flatten().count();
                    let into = ins_into + picked.iter().flatten().filter(|up| !**up).count();
                    ins.len() + present == 2 && into == 1
                };
                let result = plausible
                    .then(|| {
                        transition(
                            model, role, &ins, &base, &outs, &picked, letters, partner, sigma, tau,
                            n,
                        )
                    })
                    .flatten();
                if let Some((slots_out, letters_out, plain_ok)) = result {
                    let plain = if plain_ok { plain } else { 0 };
                    if mode == SweepMode::PlainAndOriented || plain != 0 {
                        let key = (encode(&slots_out, n), letters_out);
                        let slot = next.entry(key).or_insert((0, 0));
                        slot.0 = slot.0.checked_add(plain).expect("plain count overflow");
                        slot.1 = slot
                            .1
                            .checked_add(oriented)
                            .expect("oriented count overflow");
                    }
                }
                let Some(k) = (0..outs.len()).find(|&k| choice[k] + 1 < options[k].len()) else {
                    break;
                };
                choice[k] += 1;
                choice[..k].fill(0);
            }
        }
        states = next;
        frontier = kept
            .iter()
            .map(|&k| frontier[k])
            .chain(outs.iter().copied())
            .collect();
    }

    let mut out = BoundaryCounts {
        mode,
        counts: HashMap::new(),
    };
    for ((codes, letters), (plain, oriented)) in states {
        debug_assert!(codes.iter().all(|&c| c == 0));
        let sigma: Vec<u8> = (0..2 * n)
            .map(|i| ((letters.sigma >> i) & 1) as u8)
            .collect();
        let tau: Vec<u8> = (0..2 * n).map(|i| ((letters.tau >> i) & 1) as u8).collect();
        out.add((sigma, tau), &BigInt::from(plain), &BigInt::from(oriented));
    }
    out
}

/// Applies the local rule at vertex `v`. Returns the new frontier slots (the
/// kept ones followed by the out edges), the updated boundary letters, and
/// whether the plain conditions survive; `None` if the choice is illegal.
#[allow(clippy::too_many_arguments)]
fn transition(
    model: &TriangleModel,
    role: VertexRole,
    ins: &[(usize, Strand)],
    base: &[Slot],
    outs: &[usize],
    picked: &[Option<bool>],
    mut letters: Letters,
    partner: Option<&[usize]>,
    sigma: Option<&BinaryWord>,
    tau: Option<&BinaryWord>,
    n: usize,
) -> Option<(Vec<Slot>, Letters, bool)> {
    let present_outs: Vec<(usize, bool)> = outs
        .iter()
        .zip(picked)
        .filter_map(|(&e, p)| p.map(|up| (e, up)))
        .collect();
    // An in edge points into v when it goes up; an out edge when it goes down.
    let into = ins.iter().filter(|(_, s)| s.up).count()
        + present_outs.iter().filter(|(_, up)| !up).count();
    let degree = ins.len() + present_outs.len();
    let mut out_slots: Vec<Slot> = picked.iter().map(|_| None).collect();
    let mut slots: Vec<Slot> = base.to_vec();
    let mut plain_ok = true;

    let out_index = |e: usize| outs.iter().position(|&o| o == e).expect("out edge");

    match role {
        VertexRole::Top => {
            if degree != 0 {
                return None;
            }
            letters.sigma |= 1 << (2 * n - 1);
            if sigma.is_some_and(|s| s.get(2 * n - 1) != 1) || tau.is_some_and(|t| t.get(0) != 0) {
                return None;
            }
        }
        VertexRole::Left(i) => {
            // Right edge present and leaving; optional edge from below entering.
            let [(right, true)] = present_outs[..] else {
                return None;
            };
            let has_down = match ins {
                [] => false,
                [(_, s)] if s.up => true,
                _ => return None,
            };
            let letter = u8::from(!has_down);
            if sigma.is_some_and(|s| s.get(i - 1) != letter) {
                return None;
            }
            letters.sigma |= u32::from(letter) << (i - 1);
            let tag = if has_down { ins[0].1.tag } else { Tag::Left };
            out_slots[out_index(right)] = Some(Strand { up: true, tag });
        }
        VertexRole::Right(k) => {
            if !present_outs.is_empty() {
                return None;
            }
            let horizontal = ins
                .iter()
                .find(|(e, _)| model.edge(*e).kind == EdgeKind::Horizontal)?;
            if !horizontal.1.up {
                return None;
            }
            let down = ins
                .iter()
                .find(|(e, _)| model.edge(*e).kind != EdgeKind::Horizontal);
            let letter = u8::from(down.is_some());
            if tau.is_some_and(|t| t.get(k - 1) != letter) {
                return None;
            }
            letters.tau |= u32::from(letter) << (k - 1);
            match down {
                None => plain_ok = join(&mut slots, horizontal.1.tag, Tag::Right, true, partner),
                Some((_, d)) => {
                    if d.up {
                        return None;
                    }
                    // Entering from the left and leaving downwards is a clockwise corner.
                    plain_ok = join(&mut slots, horizontal.1.tag, d.tag, true, partner);
                }
            }
        }
        VertexRole::Internal => {
            if degree != 2 || into != 1 {
                return None;
            }
            match (ins, &present_outs[..]) {
                ([(e1, s1), (_, s2)], []) => {
                    let horizontal_up = if model.edge(*e1).kind == EdgeKind::Horizontal {
                        s1.up
                    } else {
                        s2.up
                    };
                    plain_ok = join(&mut slots, s1.tag, s2.tag, horizontal_up, partner);
                }
                ([(_, s)], [(e, up)]) => {
                    out_slots[out_index(*e)] = Some(Strand {
                        up: *up,
                        tag: s.tag,
                    });
                }
                ([], [(e1, up1), (e2, up2)]) => {
                    let id = fresh_pair_id(&slots);
                    out_slots[out_index(*e1)] = Some(Strand {
                        up: *up1,
                        tag: Tag::Pair(id),
                    });
                    out_slots[out_index(*e2)] = Some(Strand {
                        up: *up2,
                        tag: Tag::Pair(id),
                    });
                }
                _ => unreachable!("degree two"),
            }
        }
    }
    slots.extend(out_slots);
    normalize(&mut slots);
    Some((slots, letters, plain_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_dyck;

    #[test]
    fn sweep_agrees_with_backtracking() {
        for n in 1..=3 {
            let model = TriangleModel::new(n);
            for pi in enumerate_dyck(n) {
                let fast = count_by_boundary(&model, &pi, None, None, SweepMode::PlainAndOriented);
                let lean = count_by_boundary(&model, &pi, None, None, SweepMode::PlainOnly);
                let slow = count_by_backtracking(&model, &pi, None, None);
                let mut a: Vec<_> = fast.entries().collect();
                let mut b: Vec<_> = slow.entries().collect();
                a.sort();
                b.sort();
                assert_eq!(a, b, "pi = {pi}");
                for (s, t, plain, _) in &b {
                    assert_eq!(&&lean.plain(s, t), plain);
                }
            }
        }
    }

    #[test]
    fn fixed_boundaries_restrict_the_sweep() {
        let model = TriangleModel::new(2);
        let w = |s: &str| s.parse::<BinaryWord>().unwrap();
        let all = count_by_boundary(&model, &w("0101"), None, None, SweepMode::PlainAndOriented);
        for s in enumerate_dyck(2) {
            for t in enumerate_dyck(2) {
                let one = count_by_boundary(
                    &model,
                    &w("0101"),
                    Some(&s),
                    Some(&t),
                    SweepMode::PlainAndOriented,
                );
                assert_eq!(one.plain(&s, &t), all.plain(&s, &t));
                assert_eq!(one.oriented(&s, &t), all.oriented(&s, &t));
                assert!(one.entries().count() <= 1);
            }
        }
    }
}
