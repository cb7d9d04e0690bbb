use super::grid::{GridModel, Point};
use super::FplConfiguration;

/// Sides of cell `(a, b)` as `[bottom, top, left, right]`; the cell's
/// corners are `(a-1, b-1)` and `(a, b)`. Boundary cells lack some sides.
pub fn cell_sides(model: &GridModel, a: i32, b: i32) -> [Option<usize>; 4] {
    let seg = |p: Point, q: Point| model.segment(p, q);
    [
        seg((a - 1, b - 1), (a, b - 1)),
        seg((a - 1, b), (a, b)),
        seg((a - 1, b - 1), (a - 1, b)),
        seg((a, b - 1), (a, b)),
    ]
}

/// Cells on the main diagonal (`a == b`) are even.
pub fn cell_is_even(a: i32, b: i32) -> bool {
    (a + b) % 2 == 0
}

/// The move `U` on one cell: a cell holding exactly two chosen sides that
/// face each other is left alone, any other cell has its sides complemented.
fn apply_u(chosen: &mut [bool], sides: [Option<usize>; 4]) {
    let on = |k: usize| sides[k].is_some_and(|e| chosen[e]);
    let count = (0..4).filter(|&k| on(k)).count();
    let parallel = (on(0) && on(1)) || (on(2) && on(3));
    if count == 2 && parallel {
        return;
    }
    for e in sides.into_iter().flatten() {
        chosen[e] = !chosen[e];
    }
}

fn apply_to_cells(f: &FplConfiguration, even_cells: bool) -> FplConfiguration {
    let model = f.grid();
    let mut chosen = f.chosen_vec();
    let n = model.n() as i32;
    for a in 0..=n {
        for b in 0..=n {
            if cell_is_even(a, b) == even_cells {
                apply_u(&mut chosen, cell_sides(model, a, b));
            }
        }
    }
    FplConfiguration::from_chosen(f.grid_arc(), &chosen, f.parity().flip())
        .expect("Wieland's move preserves full packing")
}

/// Wieland's rotation: `U` on the active cells (even cells for an even
/// configuration, odd cells for an odd one).
pub fn wieland(f: &FplConfiguration) -> FplConfiguration {
    apply_to_cells(f, f.parity().is_even())
}

/// The inverse rotation: `U` on the cells that are not active for the
/// input's parity. `U` is an involution on each cell, so this undoes
/// [`wieland`].
pub fn wieland_inverse(f: &FplConfiguration) -> FplConfiguration {
    apply_to_cells(f, f.parity().is_odd())
}

/// Mirror image across the main diagonal; label `l` becomes `4n + 1 - l`,
/// so the parity flips.
pub fn reflect(f: &FplConfiguration) -> FplConfiguration {
    let model = f.grid();
    let mut chosen = vec![false; model.edges().len()];
    let swap = |p: Point| (p.1, p.0);
    for (id, e) in model.edges().iter().enumerate() {
        if f.contains(id) {
            let image = model
                .segment(swap(e.a), swap(e.b))
                .expect("grid is symmetric");
            chosen[image] = true;
        }
    }
    FplConfiguration::from_chosen(f.grid_arc(), &chosen, f.parity().flip())
        .expect("reflection preserves full packing")
}
