//! The open port-graph diagram IR.
//!
//! A diagram is stored as a *layered word*: a sequence of slices, each a
//! bottom-to-top list of cells. Positional wiring connects each slice's
//! outputs to the next slice's inputs in order, so the word is a faithful
//! planar drawing: it determines every node's cyclic port order and the face
//! in which each floating component sits. The abstract port graph (with
//! cups/caps, crossings, framings dissolved or kept as the regime demands)
//! is derived in [`graph`].
//!
//! Conventions: index 0 is the bottom wire. A right trace loops above the
//! body, a left trace below; trace turn-backs carry winding deltas +1 then
//! -1 (net zero). Mirroring (dagger) flips left-right and preserves wire
//! directions; rotation (mate) turns the whole word by 180 degrees and
//! shifts every parity by one.

pub mod graph;
pub mod invariants;
pub mod iso;

use std::fmt;

use thiserror::Error;

use crate::signature::WireLabel;

pub use graph::{Endpoint, GEdge, GNode, GNodeKind, PortDir, PortGraph};
pub use invariants::InvariantVector;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum DotKind {
    Copy,
    Erase,
    Merge,
    Init,
}

/// One cell of a slice.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Cell {
    /// A wire passing through.
    Wire(WireLabel),
    /// A generator box; `mirrored` marks the dagger image, `rotated` the
    /// 180-degree adjoint mate.
    Box {
        generator: String,
        mirrored: bool,
        rotated: bool,
        ins: Vec<WireLabel>,
        outs: Vec<WireLabel>,
    },
    /// Two wires crossing; consumes `(bottom, top)`, produces `(top,
    /// bottom)`. Sign +1 means the strand entering at the bottom passes
    /// over, -1 under, 0 a symmetric crossing.
    Crossing { sign: i8, bottom: WireLabel, top: WireLabel },
    /// A half-turn opening: no inputs, produces `(bottom, top)`. The two
    /// parities differ by exactly one.
    Cup { bottom: WireLabel, top: WireLabel },
    /// A half-turn closing: consumes `(bottom, top)`, no outputs.
    Cap { bottom: WireLabel, top: WireLabel },
    /// Copy/erase/merge/initial dot on a single object wire.
    Dot { kind: DotKind, label: WireLabel },
    /// Integer framing (ribbon twist) on one wire.
    Frame { delta: i64, label: WireLabel },
    /// Invisible winding coercion (the pivotal structure): consumes
    /// `label`, produces `label` shifted by `delta`.
    Shift { delta: i64, label: WireLabel },
}

impl Cell {
    pub fn consumed(&self) -> Vec<WireLabel> {
        match self {
            Cell::Wire(l) => vec![l.clone()],
            Cell::Box { ins, .. } => ins.clone(),
            Cell::Crossing { bottom, top, .. } => vec![bottom.clone(), top.clone()],
            Cell::Cup { .. } => vec![],
            Cell::Cap { bottom, top } => vec![bottom.clone(), top.clone()],
            Cell::Dot { kind, label } => match kind {
                DotKind::Copy | DotKind::Erase => vec![label.clone()],
                DotKind::Merge => vec![label.clone(), label.clone()],
                DotKind::Init => vec![],
            },
            Cell::Frame { label, .. } => vec![label.clone()],
            Cell::Shift { label, .. } => vec![label.clone()],
        }
    }

    pub fn produced(&self) -> Vec<WireLabel> {
        match self {
            Cell::Wire(l) => vec![l.clone()],
            Cell::Box { outs, .. } => outs.clone(),
            Cell::Crossing { bottom, top, .. } => vec![top.clone(), bottom.clone()],
            Cell::Cup { bottom, top } => vec![bottom.clone(), top.clone()],
            Cell::Cap { .. } => vec![],
            Cell::Dot { kind, label } => match kind {
                DotKind::Copy => vec![label.clone(), label.clone()],
                DotKind::Erase => vec![],
                DotKind::Merge | DotKind::Init => vec![label.clone()],
            },
            Cell::Frame { label, .. } => vec![label.clone()],
            Cell::Shift { delta, label } => vec![label.shifted(*delta)],
        }
    }

    pub fn is_wire(&self) -> bool {
        matches!(self, Cell::Wire(_))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash, Default)]
pub struct Slice {
    pub cells: Vec<Cell>,
}

impl Slice {
    pub fn new(cells: Vec<Cell>) -> Self {
        Slice { cells }
    }

    pub fn wires(labels: &[WireLabel]) -> Self {
        Slice { cells: labels.iter().cloned().map(Cell::Wire).collect() }
    }

    pub fn consumed(&self) -> Vec<WireLabel> {
        self.cells.iter().flat_map(|c| c.consumed()).collect()
    }

    pub fn produced(&self) -> Vec<WireLabel> {
        self.cells.iter().flat_map(|c| c.produced()).collect()
    }

    pub fn is_all_wires(&self) -> bool {
        self.cells.iter().all(Cell::is_wire)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("boundary mismatch: expected [{expected}], got [{got}]")]
    BoundaryMismatch { expected: String, got: String },
    #[error("malformed diagram word at slice {slice}: expected [{expected}], got [{got}]")]
    Malformed { slice: usize, expected: String, got: String },
    #[error("rotation is not available: {0}")]
    RotateUnsupported(String),
    #[error("planar comparison needs a crossing-free planar regime, found {0}")]
    MissingRotationSystem(String),
    #[error("winding inconsistency on an edge from {from} to {to}: delta {delta}")]
    WindingInconsistency { from: String, to: String, delta: i64 },
}

fn labels_str(ls: &[WireLabel]) -> String {
    ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
}

/// An anchored open diagram as a layered word.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Diagram {
    pub inputs: Vec<WireLabel>,
    pub outputs: Vec<WireLabel>,
    pub slices: Vec<Slice>,
}

impl Diagram {
    /// The identity diagram on a wire list.
    pub fn identity(labels: Vec<WireLabel>) -> Self {
        Diagram { outputs: labels.clone(), inputs: labels, slices: Vec::new() }
    }

    pub fn from_cell(cell: Cell) -> Self {
        let slice = Slice::new(vec![cell]);
        Diagram {
            inputs: slice.consumed(),
            outputs: slice.produced(),
            slices: vec![slice],
        }
    }

    /// Assemble and validate a word.
    pub fn new(inputs: Vec<WireLabel>, slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let mut current = inputs.clone();
        for (i, s) in slices.iter().enumerate() {
            let consumed = s.consumed();
            if consumed != current {
                return Err(DiagramError::Malformed {
                    slice: i,
                    expected: labels_str(&current),
                    got: labels_str(&consumed),
                });
            }
            current = s.produced();
        }
        Ok(Diagram { inputs, outputs: current, slices })
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        let d = Diagram::new(self.inputs.clone(), self.slices.clone())?;
        if d.outputs != self.outputs {
            return Err(DiagramError::Malformed {
                slice: self.slices.len(),
                expected: labels_str(&self.outputs),
                got: labels_str(&d.outputs),
            });
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.slices
            .iter()
            .map(|s| s.cells.iter().filter(|c| !c.is_wire()).count())
            .sum()
    }

    /// Drop slices that are pure wires.
    pub fn compact(mut self) -> Self {
        self.slices.retain(|s| !s.is_all_wires());
        self
    }
}

/// Sequential composition: `g` after `f` (boundary gluing).
pub fn compose_d(f: &Diagram, g: &Diagram) -> Result<Diagram, DiagramError> {
    if f.outputs != g.inputs {
        return Err(DiagramError::BoundaryMismatch {
            expected: labels_str(&f.outputs),
            got: labels_str(&g.inputs),
        });
    }
    let mut slices = f.slices.clone();
    slices.extend(g.slices.iter().cloned());
    Ok(Diagram { inputs: f.inputs.clone(), outputs: g.outputs.clone(), slices })
}

/// Parallel composition: `g` stacked above `f`.
pub fn tensor_d(f: &Diagram, g: &Diagram) -> Diagram {
    let n = f.slices.len().max(g.slices.len());
    let mut slices = Vec::with_capacity(n);
    for i in 0..n {
        let mut cells = match f.slices.get(i) {
            Some(s) => s.cells.clone(),
            None => Slice::wires(&f.outputs).cells,
        };
        cells.extend(match g.slices.get(i) {
            Some(s) => s.cells.clone(),
            None => Slice::wires(&g.outputs).cells,
        });
        slices.push(Slice::new(cells));
    }
    let mut inputs = f.inputs.clone();
    inputs.extend(g.inputs.iter().cloned());
    let mut outputs = f.outputs.clone();
    outputs.extend(g.outputs.iter().cloned());
    Diagram { inputs, outputs, slices }
}

fn mirror_cell(c: &Cell) -> Cell {
    match c {
        Cell::Wire(l) => Cell::Wire(l.clone()),
        Cell::Box { generator, mirrored, rotated, ins, outs } => Cell::Box {
            generator: generator.clone(),
            mirrored: !mirrored,
            rotated: *rotated,
            ins: outs.clone(),
            outs: ins.clone(),
        },
        Cell::Crossing { sign, bottom, top } => Cell::Crossing {
            sign: -sign,
            bottom: top.clone(),
            top: bottom.clone(),
        },
        Cell::Cup { bottom, top } => Cell::Cap { bottom: bottom.clone(), top: top.clone() },
        Cell::Cap { bottom, top } => Cell::Cup { bottom: bottom.clone(), top: top.clone() },
        Cell::Dot { kind, label } => Cell::Dot {
            kind: match kind {
                DotKind::Copy => DotKind::Merge,
                DotKind::Merge => DotKind::Copy,
                DotKind::Erase => DotKind::Init,
                DotKind::Init => DotKind::Erase,
            },
            label: label.clone(),
        },
        Cell::Frame { delta, label } => Cell::Frame { delta: -delta, label: label.clone() },
        Cell::Shift { delta, label } => {
            Cell::Shift { delta: -delta, label: label.shifted(*delta) }
        }
    }
}

/// The dagger image: left-right mirror. Boxes toggle their `mirrored` flag,
/// crossing signs negate, framings invert; wire directions are preserved.
pub fn mirror_d(d: &Diagram) -> Diagram {
    let slices = d
        .slices
        .iter()
        .rev()
        .map(|s| Slice::new(s.cells.iter().map(mirror_cell).collect()))
        .collect();
    Diagram { inputs: d.outputs.clone(), outputs: d.inputs.clone(), slices }
}

fn rotate_cell(c: &Cell) -> Result<Cell, DiagramError> {
    let up = |ls: &[WireLabel]| -> Vec<WireLabel> {
        ls.iter().rev().map(|l| l.shifted(1)).collect()
    };
    Ok(match c {
        Cell::Wire(l) => Cell::Wire(l.shifted(1)),
        Cell::Box { generator, mirrored, rotated, ins, outs } => Cell::Box {
            generator: generator.clone(),
            mirrored: *mirrored,
            rotated: !rotated,
            ins: up(outs),
            outs: up(ins),
        },
        Cell::Crossing { sign, bottom, top } => Cell::Crossing {
            sign: *sign,
            bottom: bottom.shifted(1),
            top: top.shifted(1),
        },
        Cell::Cup { bottom, top } => {
            Cell::Cap { bottom: top.shifted(1), top: bottom.shifted(1) }
        }
        Cell::Cap { bottom, top } => {
            Cell::Cup { bottom: top.shifted(1), top: bottom.shifted(1) }
        }
        Cell::Dot { .. } => {
            return Err(DiagramError::RotateUnsupported(
                "copy/erase/merge/initial dots cannot be rotated".into(),
            ))
        }
        Cell::Frame { delta, label } => Cell::Frame { delta: *delta, label: label.shifted(1) },
        Cell::Shift { delta, label } => {
            Cell::Shift { delta: -delta, label: label.shifted(delta + 1) }
        }
    })
}

/// Rotate the whole diagram by 180 degrees: boxes toggle `rotated`,
/// boundaries reverse and dualize (every parity shifts by +1).
pub fn rotate_d(d: &Diagram) -> Result<Diagram, DiagramError> {
    let mut slices = Vec::with_capacity(d.slices.len());
    for s in d.slices.iter().rev() {
        let mut cells = Vec::with_capacity(s.cells.len());
        for c in s.cells.iter().rev() {
            cells.push(rotate_cell(c)?);
        }
        slices.push(Slice::new(cells));
    }
    let flip = |ls: &[WireLabel]| -> Vec<WireLabel> {
        ls.iter().rev().map(|l| l.shifted(1)).collect()
    };
    Ok(Diagram { inputs: flip(&d.outputs), outputs: flip(&d.inputs), slices })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TraceSide {
    Left,
    Right,
}

/// Close a trace loop over the top (right trace) or bottom (left trace)
/// `k` wires. The turn-back pair carries winding deltas +1 then -1 (net
/// zero); framing is untouched.
pub fn close_trace(d: &Diagram, k: usize, side: TraceSide) -> Result<Diagram, DiagramError> {
    if k == 0 {
        return Ok(d.clone());
    }
    let n = d.inputs.len();
    let m = d.outputs.len();
    if k > n || k > m {
        return Err(DiagramError::BoundaryMismatch {
            expected: format!("at least {k} wires on each side"),
            got: format!("{n} inputs, {m} outputs"),
        });
    }
    let (in_base, in_loop, out_base, out_loop) = match side {
        TraceSide::Right => (
            d.inputs[..n - k].to_vec(),
            d.inputs[n - k..].to_vec(),
            d.outputs[..m - k].to_vec(),
            d.outputs[m - k..].to_vec(),
        ),
        TraceSide::Left => (
            d.inputs[k..].to_vec(),
            d.inputs[..k].to_vec(),
            d.outputs[k..].to_vec(),
            d.outputs[..k].to_vec(),
        ),
    };
    if in_loop != out_loop {
        return Err(DiagramError::BoundaryMismatch {
            expected: labels_str(&in_loop),
            got: labels_str(&out_loop),
        });
    }

    let ret = |l: &WireLabel| l.shifted(1);
    let mut slices = Vec::new();

    match side {
        TraceSide::Right => {
            // Cups open outermost-first: after the prefix the frontier reads
            // [base, feeds bottom-to-top, returns top-to-bottom-of-loop].
            for j in 0..k {
                let mut cells: Vec<Cell> = in_base.iter().cloned().map(Cell::Wire).collect();
                for f in &in_loop[..j] {
                    cells.push(Cell::Wire(f.clone()));
                }
                cells.push(Cell::Cup {
                    bottom: in_loop[j].clone(),
                    top: ret(&in_loop[j]),
                });
                for f in in_loop[..j].iter().rev() {
                    cells.push(Cell::Wire(ret(f)));
                }
                slices.push(Slice::new(cells));
            }
            // Body padded with the return wires above.
            let ret_stack: Vec<WireLabel> =
                in_loop.iter().rev().map(|l| ret(l)).collect();
            for s in &d.slices {
                let mut cells = s.cells.clone();
                cells.extend(ret_stack.iter().cloned().map(Cell::Wire));
                slices.push(Slice::new(cells));
            }
            if d.slices.is_empty() {
                // No body slices: the frontier already matches.
            }
            // Caps close innermost-first.
            for j in (0..k).rev() {
                let mut cells: Vec<Cell> = out_base.iter().cloned().map(Cell::Wire).collect();
                for f in &out_loop[..j] {
                    cells.push(Cell::Wire(f.clone()));
                }
                cells.push(Cell::Cap {
                    bottom: out_loop[j].clone(),
                    top: ret(&out_loop[j]),
                });
                for f in out_loop[..j].iter().rev() {
                    cells.push(Cell::Wire(ret(f)));
                }
                slices.push(Slice::new(cells));
            }
            Diagram::new(in_base, slices)
        }
        TraceSide::Left => {
            // Loop below: returns sit under the feeds; the bottommost traced
            // wire is the innermost loop.
            for j in 0..k {
                // j-th slice opens the loop for wire k-1-j (outermost first).
                let w = k - 1 - j;
                let mut cells: Vec<Cell> = Vec::new();
                for f in in_loop[w + 1..].iter().rev() {
                    cells.push(Cell::Wire(ret(f)));
                }
                cells.push(Cell::Cup {
                    bottom: ret(&in_loop[w]),
                    top: in_loop[w].clone(),
                });
                for f in &in_loop[w + 1..] {
                    cells.push(Cell::Wire(f.clone()));
                }
                cells.extend(in_base.iter().cloned().map(Cell::Wire));
                slices.push(Slice::new(cells));
            }
            let ret_stack: Vec<WireLabel> =
                in_loop.iter().rev().map(|l| ret(l)).collect();
            for s in &d.slices {
                let mut cells: Vec<Cell> =
                    ret_stack.iter().cloned().map(Cell::Wire).collect();
                cells.extend(s.cells.iter().cloned());
                slices.push(Slice::new(cells));
            }
            for j in (0..k).rev() {
                let w = k - 1 - j;
                let mut cells: Vec<Cell> = Vec::new();
                for f in out_loop[w + 1..].iter().rev() {
                    cells.push(Cell::Wire(ret(f)));
                }
                cells.push(Cell::Cap {
                    bottom: ret(&out_loop[w]),
                    top: out_loop[w].clone(),
                });
                for f in &out_loop[w + 1..] {
                    cells.push(Cell::Wire(f.clone()));
                }
                cells.extend(out_base.iter().cloned().map(Cell::Wire));
                slices.push(Slice::new(cells));
            }
            let mut start: Vec<WireLabel> =
                in_loop.iter().rev().map(|l| ret(l)).collect();
            start.extend(in_loop.iter().cloned());
            start.extend(in_base.iter().cloned());
            // The first cup slice consumes nothing of the loop: rebuild the
            // word from the true inputs.
            let _ = start;
            Diagram::new(in_base, slices)
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "inputs: [{}]", labels_str(&self.inputs))?;
        for (i, s) in self.slices.iter().enumerate() {
            write!(f, "slice {i}:")?;
            for c in &s.cells {
                match c {
                    Cell::Wire(l) => write!(f, " wire({l})")?,
                    Cell::Box { generator, mirrored, rotated, .. } => write!(
                        f,
                        " box({generator}{}{})",
                        if *mirrored { "+" } else { "" },
                        if *rotated { "*" } else { "" }
                    )?,
                    Cell::Crossing { sign, .. } => write!(f, " cross({sign:+})")?,
                    Cell::Cup { bottom, top } => write!(f, " cup({bottom}|{top})")?,
                    Cell::Cap { bottom, top } => write!(f, " cap({bottom}|{top})")?,
                    Cell::Dot { kind, label } => write!(f, " dot({kind:?},{label})")?,
                    Cell::Frame { delta, label } => write!(f, " frame({delta:+},{label})")?,
                    Cell::Shift { delta, label } => write!(f, " shift({delta:+},{label})")?,
                }
            }
            writeln!(f)?;
        }
        writeln!(f, "outputs: [{}]", labels_str(&self.outputs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(o: &str, p: i64) -> WireLabel {
        WireLabel::new(o, p)
    }

    fn box_cell(name: &str, ins: Vec<WireLabel>, outs: Vec<WireLabel>) -> Cell {
        Cell::Box {
            generator: name.into(),
            mirrored: false,
            rotated: false,
            ins,
            outs,
        }
    }

    #[test]
    fn identity_absorbs_composition() {
        let f = Diagram::from_cell(box_cell("f", vec![w("A", 0)], vec![w("B", 0)]));
        let id_b = Diagram::identity(vec![w("B", 0)]);
        let fid = compose_d(&f, &id_b).unwrap();
        assert_eq!(fid, f);
    }

    #[test]
    fn compose_rejects_boundary_mismatch() {
        let f = Diagram::from_cell(box_cell("f", vec![w("A", 0)], vec![w("B", 0)]));
        let g = Diagram::from_cell(box_cell("g", vec![w("C", 0)], vec![w("D", 0)]));
        assert!(matches!(
            compose_d(&f, &g),
            Err(DiagramError::BoundaryMismatch { .. })
        ));
    }

    #[test]
    fn tensor_concatenates_boundaries() {
        let s = Diagram::from_cell(box_cell("s", vec![w("A", 0)], vec![w("B", 0)]));
        let t = Diagram::from_cell(box_cell("t", vec![w("C", 0)], vec![w("D", 0)]));
        let st = tensor_d(&s, &t);
        assert_eq!(st.inputs, vec![w("A", 0), w("C", 0)]);
        assert_eq!(st.outputs, vec![w("B", 0), w("D", 0)]);
        st.validate().unwrap();
    }

    #[test]
    fn mirror_is_an_involution() {
        let f = Diagram::from_cell(box_cell("f", vec![w("A", 0)], vec![w("B", 0), w("C", 0)]));
        let g = Diagram::from_cell(box_cell("g", vec![w("B", 0), w("C", 0)], vec![w("D", 0)]));
        let d = compose_d(&f, &g).unwrap();
        let dd = mirror_d(&mirror_d(&d));
        assert_eq!(d, dd);
        mirror_d(&d).validate().unwrap();
    }

    #[test]
    fn rotate_twice_shifts_parities_by_two() {
        let f = Diagram::from_cell(box_cell("f", vec![w("A", 0)], vec![w("B", 0)]));
        let r = rotate_d(&f).unwrap();
        r.validate().unwrap();
        assert_eq!(r.inputs, vec![w("B", 1)]);
        assert_eq!(r.outputs, vec![w("A", 1)]);
        let rr = rotate_d(&r).unwrap();
        rr.validate().unwrap();
        assert_eq!(rr.inputs, vec![w("A", 2)]);
        match &rr.slices[0].cells[0] {
            Cell::Box { rotated, .. } => assert!(!rotated),
            other => panic!("expected a box, got {other:?}"),
        }
    }

    #[test]
    fn close_trace_over_zero_wires_is_identity() {
        let f = Diagram::from_cell(box_cell("f", vec![w("A", 0)], vec![w("B", 0)]));
        assert_eq!(close_trace(&f, 0, TraceSide::Right).unwrap(), f);
    }

    #[test]
    fn close_trace_right_builds_a_valid_word() {
        // f : A * X -> B * X traced over X.
        let f = Diagram::from_cell(box_cell(
            "f",
            vec![w("A", 0), w("X", 0)],
            vec![w("B", 0), w("X", 0)],
        ));
        let t = close_trace(&f, 1, TraceSide::Right).unwrap();
        t.validate().unwrap();
        assert_eq!(t.inputs, vec![w("A", 0)]);
        assert_eq!(t.outputs, vec![w("B", 0)]);
    }

    #[test]
    fn close_trace_left_builds_a_valid_word() {
        let f = Diagram::from_cell(box_cell(
            "f",
            vec![w("X", 0), w("A", 0)],
            vec![w("X", 0), w("B", 0)],
        ));
        let t = close_trace(&f, 1, TraceSide::Left).unwrap();
        t.validate().unwrap();
        assert_eq!(t.inputs, vec![w("A", 0)]);
        assert_eq!(t.outputs, vec![w("B", 0)]);
    }

    #[test]
    fn close_trace_nested_equals_once_over_two() {
        let f = Diagram::from_cell(box_cell(
            "f",
            vec![w("A", 0), w("X", 0), w("Y", 0)],
            vec![w("B", 0), w("X", 0), w("Y", 0)],
        ));
        let once = close_trace(&f, 2, TraceSide::Right).unwrap();
        let inner = close_trace(&f, 1, TraceSide::Right).unwrap();
        let twice = close_trace(&inner, 1, TraceSide::Right).unwrap();
        once.validate().unwrap();
        twice.validate().unwrap();
        // Same turn structure: the words agree slice for slice after
        // compaction.
        assert_eq!(once.compact(), twice.compact());
    }

    #[test]
    fn close_trace_mismatched_labels_fails() {
        let f = Diagram::from_cell(box_cell(
            "f",
            vec![w("A", 0), w("X", 0)],
            vec![w("B", 0), w("Y", 0)],
        ));
        assert!(matches!(
            close_trace(&f, 1, TraceSide::Right),
            Err(DiagramError::BoundaryMismatch { .. })
        ));
    }
}
