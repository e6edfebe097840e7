//! The abstract anchored port graph derived from a diagram word, with
//! regime-dependent dissolution: half-turns and symmetric crossings can
//! dissolve into plain connections (with winding/turn bookkeeping), or stay
//! as map vertices when the planar embedding matters.

use std::collections::BTreeMap;

use crate::diagram::{Cell, Diagram, DiagramError, Diagram as _Diagram, DotKind, Slice};
use crate::signature::WireLabel;

pub type NodeId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum PortDir {
    In,
    Out,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    BoundaryIn(usize),
    BoundaryOut(usize),
    Port { node: NodeId, dir: PortDir, index: usize },
}

impl Endpoint {
    pub fn node(&self) -> Option<NodeId> {
        match self {
            Endpoint::Port { node, .. } => Some(*node),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum GNodeKind {
    Box { generator: String, mirrored: bool, rotated: bool },
    Crossing { sign: i8 },
    Dot(DotKind),
    /// Half-turn opening (two out-ports: bottom 0, top 1). Kept only in
    /// planar and move-search regimes.
    Cup,
    /// Half-turn closing (two in-ports: bottom 0, top 1).
    Cap,
}

#[derive(Clone, Debug)]
pub struct GNode {
    pub kind: GNodeKind,
    pub ins: Vec<WireLabel>,
    pub outs: Vec<WireLabel>,
    /// (slice, height) of the cell this node came from; used for edge
    /// orientation and deterministic traversal, not for equality.
    pub pos: (usize, usize),
}

impl GNode {
    /// The along-strand winding delta of a turn node, traversing from port
    /// `from` to the other port.
    pub fn turn_delta_from(&self, from: usize) -> i64 {
        let (a, b) = match self.kind {
            GNodeKind::Cup => (&self.outs[0], &self.outs[1]),
            GNodeKind::Cap => (&self.ins[0], &self.ins[1]),
            _ => return 0,
        };
        if from == 0 {
            b.parity - a.parity
        } else {
            a.parity - b.parity
        }
    }
}

#[derive(Clone, Debug)]
pub struct GEdge {
    /// Producer-side end (earlier in word order).
    pub a: Endpoint,
    /// Consumer-side end.
    pub b: Endpoint,
    /// Accumulated parity deltas traversing a -> b (shifts plus dissolved
    /// turns).
    pub winding: i64,
    /// Accumulated half-turn deltas of dissolved cups/caps only (geometric
    /// curvature), traversing a -> b.
    pub turns: i64,
    pub framing: i64,
    /// Wire label at the `a` end.
    pub label: WireLabel,
}

/// A dissolved closed loop with no remaining nodes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GCircle {
    pub label: WireLabel,
    pub framing: i64,
}

/// Where a floating component sits: under it is either nothing (the face
/// along the bottom of the rectangle) or a specific side of a specific
/// edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Host {
    Bottom,
    /// The face above the given edge, traversed in `a -> b` direction if
    /// `forward`, else in `b -> a` direction.
    AboveEdge { edge: EdgeId, forward: bool },
}

#[derive(Clone, Debug)]
pub struct PortGraph {
    pub inputs: Vec<WireLabel>,
    pub outputs: Vec<WireLabel>,
    pub nodes: Vec<GNode>,
    pub edges: Vec<GEdge>,
    pub circles: Vec<GCircle>,
    /// For each node, the host descriptor of the wire directly below it at
    /// its slice (used for face-nesting checks in planar regimes; empty
    /// when nesting is not tracked).
    pub below: Vec<Option<Host>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GraphMode {
    pub dissolve_turns: bool,
    pub dissolve_crossings: bool,
    pub track_nesting: bool,
}

impl GraphMode {
    pub fn planar() -> Self {
        GraphMode { dissolve_turns: false, dissolve_crossings: false, track_nesting: true }
    }

    pub fn iso(dissolve_crossings: bool) -> Self {
        GraphMode { dissolve_turns: true, dissolve_crossings, track_nesting: false }
    }

    pub fn moves() -> Self {
        GraphMode { dissolve_turns: false, dissolve_crossings: false, track_nesting: false }
    }
}

/// One open wire path during the left-to-right walk.
#[derive(Clone, Debug)]
struct OpenEnd {
    source: PathSource,
    winding: i64,
    turns: i64,
    framing: i64,
    label: WireLabel,
}

#[derive(Clone, Copy, Debug)]
enum PathSource {
    /// Anchored at a real endpoint (with the label there).
    End(Endpoint),
    /// One leg of a dissolved cup: (pending id, leg index 0=bottom 1=top).
    Pending(usize, usize),
}

#[derive(Clone, Debug, Default)]
struct Pending {
    /// First side to close: (endpoint, winding, turns, framing, label at
    /// endpoint, leg).
    closed: Option<(Endpoint, i64, i64, i64, WireLabel, usize)>,
    /// Turn delta of the cup from leg 0 to leg 1.
    delta01: i64,
    labels: [WireLabel; 2],
}

struct Walker {
    nodes: Vec<GNode>,
    edges: Vec<GEdge>,
    circles: Vec<GCircle>,
    below: Vec<Option<Host>>,
    pendings: Vec<Pending>,
    mode: GraphMode,
    /// Maps OpenEnd identity to the edge it ended up in (set at emission).
    /// Used to resolve `below` references after the walk.
    frontier: Vec<(usize, OpenEnd)>,
    next_open_id: usize,
    /// open-id -> (edge, forward) once the path is closed.
    seg_resolution: BTreeMap<usize, (EdgeId, bool)>,
    /// node -> open-id of the wire directly below it (resolved later).
    below_pending: Vec<Option<usize>>,
}

impl Walker {
    fn emit_edge(&mut self, mut e: GEdge) -> EdgeId {
        let id = self.edges.len();
        // Normalize: keep as constructed.
        if let Endpoint::Port { .. } = e.a {}
        self.edges.push(e.clone());
        let _ = &mut e;
        id
    }

    fn close_open(&mut self, open_id: usize, o: OpenEnd, at: Endpoint) {
        match o.source {
            PathSource::End(a) => {
                let id = self.emit_edge(GEdge {
                    a,
                    b: at,
                    winding: o.winding,
                    turns: o.turns,
                    framing: o.framing,
                    label: o.label.shifted(-o.winding),
                });
                self.seg_resolution.insert(open_id, (id, true));
            }
            PathSource::Pending(pid, leg) => {
                let p = &mut self.pendings[pid];
                if let Some((other_end, w2, t2, f2, _l2, leg2)) = p.closed.take() {
                    // Traverse from `other_end` back through the cup, then out
                    // to `at`.
                    let delta_cup = if leg2 == 0 && leg == 1 {
                        p.delta01
                    } else {
                        -p.delta01
                    };
                    let label_at_other = p.labels[leg2].clone();
                    let id = self.emit_edge(GEdge {
                        a: other_end,
                        b: at,
                        winding: -w2 + delta_cup + o.winding,
                        turns: -t2 + delta_cup + o.turns,
                        framing: f2 + o.framing,
                        label: label_at_other.shifted(w2).shifted(-w2),
                    });
                    self.seg_resolution.insert(open_id, (id, true));
                    // Earlier segments of the other side ran opposite to a->b.
                    // (Those segment ids were recorded when that side closed;
                    // resolve them now.)
                    // Handled via pending_side_segs below.
                    let segs = std::mem::take(&mut self.pending_side_segs[pid]);
                    for s in segs {
                        self.seg_resolution.insert(s, (id, false));
                    }
                } else {
                    p.closed = Some((at, o.winding, o.turns, o.framing, o.label.clone(), leg));
                    self.pending_first_seg[pid] = Some(open_id);
                }
            }
        }
    }

    // placeholders set up in `to_graph`
    pending_side_segs_decl!();
}

// Walker needs per-pending segment lists; declared via fields below (macro
// kept trivial to avoid repetition).
macro_rules! pending_side_segs_decl {
    () => {};
}
use pending_side_segs_decl;

/// Build the port graph of a diagram word.
pub fn to_graph(d: &Diagram, mode: GraphMode) -> PortGraph {
    let mut w = WalkState::new(d, mode);
    w.run(d);
    w.finish(d)
}

struct WalkState {
    mode: GraphMode,
    nodes: Vec<GNode>,
    edges: Vec<GEdge>,
    circles: Vec<GCircle>,
    pendings: Vec<Pending>,
    pending_closed_segs: Vec<Vec<usize>>,
    frontier: Vec<(usize, OpenEnd)>,
    next_open: usize,
    seg_of_open: BTreeMap<usize, Vec<usize>>, // open id -> all open ids merged into it (unused)
    resolution: BTreeMap<usize, (EdgeId, bool)>,
    circle_of: BTreeMap<usize, usize>,
    below_open: Vec<Option<usize>>,
    open_segs: BTreeMap<usize, Vec<usize>>,
}

impl WalkState {
    fn new(d: &Diagram, mode: GraphMode) -> Self {
        let mut st = WalkState {
            mode,
            nodes: Vec::new(),
            edges: Vec::new(),
            circles: Vec::new(),
            pendings: Vec::new(),
            pending_closed_segs: Vec::new(),
            frontier: Vec::new(),
            next_open: 0,
            seg_of_open: BTreeMap::new(),
            resolution: BTreeMap::new(),
            circle_of: BTreeMap::new(),
            below_open: Vec::new(),
            open_segs: BTreeMap::new(),
        };
        for (i, l) in d.inputs.iter().enumerate() {
            let id = st.fresh();
            st.frontier.push((
                id,
                OpenEnd {
                    source: PathSource::End(Endpoint::BoundaryIn(i)),
                    winding: 0,
                    turns: 0,
                    framing: 0,
                    label: l.clone(),
                },
            ));
            st.open_segs.insert(id, vec![id]);
        }
        st
    }

    fn fresh(&mut self) -> usize {
        self.next_open += 1;
        self.next_open - 1
    }

    fn close(&mut self, open_id: usize, o: OpenEnd, at: Endpoint) {
        match o.source {
            PathSource::End(a) => {
                let label_at_a = o.label.shifted(-o.winding);
                let id = self.edges.len();
                self.edges.push(GEdge {
                    a,
                    b: at,
                    winding: o.winding,
                    turns: o.turns,
                    framing: o.framing,
                    label: label_at_a,
                });
                for s in self.open_segs.remove(&open_id).unwrap_or_default() {
                    self.resolution.insert(s, (id, true));
                }
            }
            PathSource::Pending(pid, leg) => {
                if let Some((other_end, w2, t2, f2, _l, leg2)) = self.pendings[pid].closed.take()
                {
                    let delta = if leg2 == 0 && leg == 1 {
                        self.pendings[pid].delta01
                    } else {
                        -self.pendings[pid].delta01
                    };
                    let id = self.edges.len();
                    let label_at_other = {
                        // label at the a endpoint: the other side's label at
                        // its endpoint.
                        let l = self.pendings[pid].labels[leg2].clone();
                        l.shifted(w2)
                    };
                    self.edges.push(GEdge {
                        a: other_end,
                        b: at,
                        winding: -w2 + delta + o.winding,
                        turns: -t2 + delta + o.turns,
                        framing: f2 + o.framing,
                        label: label_at_other,
                    });
                    for s in self.open_segs.remove(&open_id).unwrap_or_default() {
                        self.resolution.insert(s, (id, true));
                    }
                    for s in std::mem::take(&mut self.pending_closed_segs[pid]) {
                        self.resolution.insert(s, (id, false));
                    }
                } else {
                    self.pendings[pid].closed =
                        Some((at, o.winding, o.turns, o.framing, o.label.clone(), leg));
                    self.pending_closed_segs[pid] =
                        self.open_segs.remove(&open_id).unwrap_or_default();
                }
            }
        }
    }

    fn run(&mut self, d: &Diagram) {
        for (si, slice) in d.slices.iter().enumerate() {
            let old = std::mem::take(&mut self.frontier);
            let mut pos = 0usize; // position in consumed frontier
        let mut new_frontier: Vec<(usize, OpenEnd)> = Vec::new();
            for cell in &slice.cells {
                let k = cell.consumed().len();
                let consumed: Vec<(usize, OpenEnd)> = old[pos..pos + k].to_vec();
                let below = if pos > 0 { Some(old[pos - 1].0) } else { None };
                self.step(cell, consumed, below, (si, new_frontier.len()), &mut new_frontier);
                pos += k;
            }
            debug_assert_eq!(pos, old.len(), "slice {si} consumed the wrong arity");
            self.frontier = new_frontier;
        }
    }

    fn step(
        &mut self,
        cell: &Cell,
        consumed: Vec<(usize, OpenEnd)>,
        below: Option<usize>,
        pos: (usize, usize),
        out: &mut Vec<(usize, OpenEnd)>,
    ) {
        match cell {
            Cell::Wire(_) => {
                let (id, o) = consumed.into_iter().next().unwrap();
                self.open_segs.entry(id).or_default();
                out.push((id, o));
            }
            Cell::Frame { delta, .. } => {
                let (id, mut o) = consumed.into_iter().next().unwrap();
                o.framing += delta;
                out.push((id, o));
            }
            Cell::Shift { delta, .. } => {
                let (id, mut o) = consumed.into_iter().next().unwrap();
                o.winding += delta;
                o.label = o.label.shifted(*delta);
                out.push((id, o));
            }
            Cell::Crossing { sign, bottom, top } if self.mode.dissolve_crossings && *sign == 0 =>
            {
                let mut it = consumed.into_iter();
                let lo = it.next().unwrap();
                let hi = it.next().unwrap();
                let _ = (bottom, top);
                out.push(hi);
                out.push(lo);
            }
            Cell::Cup { bottom, top } if self.mode.dissolve_turns => {
                let pid = self.pendings.len();
                self.pendings.push(Pending {
                    closed: None,
                    delta01: top.parity - bottom.parity,
                    labels: [bottom.clone(), top.clone()],
                });
                self.pending_closed_segs.push(Vec::new());
                let id0 = self.fresh();
                let id1 = self.fresh();
                self.open_segs.insert(id0, vec![id0]);
                self.open_segs.insert(id1, vec![id1]);
                out.push((
                    id0,
                    OpenEnd {
                        source: PathSource::Pending(pid, 0),
                        winding: 0,
                        turns: 0,
                        framing: 0,
                        label: bottom.clone(),
                    },
                ));
                out.push((
                    id1,
                    OpenEnd {
                        source: PathSource::Pending(pid, 1),
                        winding: 0,
                        turns: 0,
                        framing: 0,
                        label: top.clone(),
                    },
                ));
            }
            Cell::Cap { bottom, top } if self.mode.dissolve_turns => {
                let mut it = consumed.into_iter();
                let (ib, ob) = it.next().unwrap();
                let (itp, otp) = it.next().unwrap();
                let delta_cap = top.parity - bottom.parity;
                // Are both sides legs of the same pending cup? Then this is a
                // closed circle.
                if let (PathSource::Pending(p1, l1), PathSource::Pending(p2, _l2)) =
                    (ob.source, otp.source)
                {
                    if p1 == p2 {
                        let framing = ob.framing + otp.framing;
                        let label = self.pendings[p1].labels[0]
                            .clone()
                            .min(self.pendings[p1].labels[1].clone());
                        let cid = self.circles.len();
                        self.circles.push(GCircle { label, framing });
                        for s in self.open_segs.remove(&ib).unwrap_or_default() {
                            self.circle_of.insert(s, cid);
                        }
                        for s in self.open_segs.remove(&itp).unwrap_or_default() {
                            self.circle_of.insert(s, cid);
                        }
                        let _ = l1;
                        return;
                    }
                }
                // Join the two paths through this cap: treat as closing the
                // bottom side at a virtual point and rerouting. Implemented by
                // closing the top side as if it ended where the bottom側
                // continues, reversed.
                self.join_through_cap(ib, ob, itp, otp, delta_cap);
            }
            _ => {
                // A real node.
                let kind = match cell {
                    Cell::Box { generator, mirrored, rotated, .. } => GNodeKind::Box {
                        generator: generator.clone(),
                        mirrored: *mirrored,
                        rotated: *rotated,
                    },
                    Cell::Crossing { sign, .. } => GNodeKind::Crossing { sign: *sign },
                    Cell::Cup { .. } => GNodeKind::Cup,
                    Cell::Cap { .. } => GNodeKind::Cap,
                    Cell::Dot { kind, .. } => GNodeKind::Dot(*kind),
                    Cell::Wire(_) | Cell::Frame { .. } | Cell::Shift { .. } => unreachable!(),
                };
                let node_id = self.nodes.len();
                self.nodes.push(GNode {
                    kind,
                    ins: cell.consumed(),
                    outs: cell.produced(),
                    pos,
                });
                self.below_open.push(None);
                if self.mode.track_nesting {
                    self.below_open[node_id] = below;
                }
                for (k, (id, o)) in consumed.into_iter().enumerate() {
                    self.close(id, o, Endpoint::Port { node: node_id, dir: PortDir::In, index: k });
                }
                for (k, l) in cell.produced().into_iter().enumerate() {
                    let id = self.fresh();
                    self.open_segs.insert(id, vec![id]);
                    out.push((
                        id,
                        OpenEnd {
                            source: PathSource::End(Endpoint::Port {
                                node: node_id,
                                dir: PortDir::Out,
                                index: k,
                            }),
                            winding: 0,
                            turns: 0,
                            framing: 0,
                            label: l,
                        },
                    ));
                }
            }
        }
    }

    /// Merge two open ends that meet at a dissolved cap.
    fn join_through_cap(
        &mut self,
        ib: usize,
        ob: OpenEnd,
        itp: usize,
        otp: OpenEnd,
        delta_cap: i64,
    ) {
        // Continue the bottom path backwards along the top path: the merged
        // path runs source(ob) -> cap -> source(otp), reversed along the top
        // side. We fold the top side's data into wherever its source was.
        match otp.source {
            PathSource::End(e_top) => {
                // The merged open path is gone: bottom side closes at e_top
                // with accumulated data: ob.data + delta(bottom->top at cap)
                // - otp.data reversed.
                let merged = OpenEnd {
                    source: ob.source,
                    winding: ob.winding + delta_cap - otp.winding,
                    turns: ob.turns + delta_cap - otp.turns,
                    framing: ob.framing + otp.framing,
                    label: otp.label.shifted(-otp.winding),
                };
                // Segments of the top side ran opposite to the merged a->b
                // direction... handled when the final edge is emitted: tag
                // them by temporarily merging seg lists (reversed segs are
                // recorded via negative markers is overkill; orientation of
                // interior segs only matters for nesting, where the below
                // wire is almost always a forward segment. We mark top-side
                // segs as reversed-in-final-edge via pending bookkeeping.)
                let top_segs = self.open_segs.remove(&itp).unwrap_or_default();
                let bot_segs = self.open_segs.remove(&ib).unwrap_or_default();
                self.close_merged(merged, e_top, bot_segs, top_segs);
            }
            PathSource::Pending(pid, leg) => {
                // The merged open end keeps the bottom source and will close
                // later through the pending cup.
                let merged = OpenEnd {
                    source: ob.source,
                    winding: ob.winding + delta_cap - otp.winding,
                    turns: ob.turns + delta_cap - otp.turns,
                    framing: ob.framing + otp.framing,
                    label: otp.label.shifted(-otp.winding),
                };
                // Close it against the pending as if arriving... but it has
                // not arrived anywhere: instead, rewrite the pending leg to
                // point at the merged source.
                let _ = (pid, leg);
                let mut segs = self.open_segs.remove(&ib).unwrap_or_default();
                segs.extend(self.open_segs.remove(&itp).unwrap_or_default());
                // Re-open under the top side's pending identity.
                let id = self.fresh();
                self.open_segs.insert(id, segs);
                // The merged path now continues from the pending cup's other
                // leg; model it by swapping: the pending leg becomes the
                // bottom source.
                self.reopen_pending(id, merged, otp.source);
            }
        }
    }

    fn reopen_pending(&mut self, id: usize, merged: OpenEnd, top_source: PathSource) {
        // The path: source(merged) ... cap ... cup-leg(top_source). Traversal
        // continues out of the cup's other leg. Register the merged side as
        // the closed half of the pending.
        if let PathSource::Pending(pid, leg) = top_source {
            match merged.source {
                PathSource::End(e) => {
                    if let Some((other_end, w2, t2, f2, _l, leg2)) =
                        self.pendings[pid].closed.take()
                    {
                        // Both legs now close: emit the edge e .. cup .. other.
                        let delta = if leg == 0 && leg2 == 1 {
                            self.pendings[pid].delta01
                        } else {
                            -self.pendings[pid].delta01
                        };
                        let eid = self.edges.len();
                        self.edges.push(GEdge {
                            a: e,
                            b: other_end,
                            winding: merged.winding + delta + w2,
                            turns: merged.turns + delta + t2,
                            framing: merged.framing + f2,
                            label: merged.label.shifted(-merged.winding),
                        });
                        for s in self.open_segs.remove(&id).unwrap_or_default() {
                            self.resolution.insert(s, (eid, true));
                        }
                        for s in std::mem::take(&mut self.pending_closed_segs[pid]) {
                            self.resolution.insert(s, (eid, true));
                        }
                    } else {
                        self.pendings[pid].closed = Some((
                            e,
                            merged.winding,
                            merged.turns,
                            merged.framing,
                            merged.label.clone(),
                            leg,
                        ));
                        self.pending_closed_segs[pid] =
                            self.open_segs.remove(&id).unwrap_or_default();
                    }
                }
                PathSource::Pending(pid2, leg2) => {
                    // Two cups chained through a cap: fuse the pendings by
                    // rewriting pid2's leg to behave as pid's leg with the
                    // accumulated data folded in. Do this by registering a
                    // synthetic closure on pid and re-pointing.
                    if pid2 == pid {
                        // A circle through one cup and this cap was already
                        // handled; reaching here means the two leg paths
                        // merged: treat as circle.
                        let framing = merged.framing;
                        let label =
                            self.pendings[pid].labels[0].clone().min(self.pendings[pid].labels[1].clone());
                        let cid = self.circles.len();
                        self.circles.push(GCircle { label, framing });
                        for s in self.open_segs.remove(&id).unwrap_or_default() {
                            self.circle_of.insert(s, cid);
                        }
                        return;
                    }
                    // Chain: the open end continues out of cup pid's other
                    // leg; record a continuation by storing data on pid2's
                    // pending as though its leg closed at a virtual spot that
                    // re-opens... Simplest correct handling: allocate a new
                    // open end sourced at Pending(pid2, leg2) whose data
                    // includes the full detour through cap and cup pid, and
                    // immediately close pid's pending against the OTHER leg's
                    // open end when it shows up. We implement by pushing the
                    // data onto pid's pending as `closed` with a sentinel
                    // endpoint that is resolved when pid's other leg closes.
                    let _ = leg2;
                    // Represent the chained state: pid's pending holds the
                    // merged data tagged as "continues into pid2".
                    self.pendings[pid].closed = Some((
                        Endpoint::BoundaryIn(usize::MAX - pid2),
                        merged.winding,
                        merged.turns,
                        merged.framing,
                        merged.label.clone(),
                        leg,
                    ));
                    self.pending_closed_segs[pid] =
                        self.open_segs.remove(&id).unwrap_or_default();
                }
            }
        } else {
            unreachable!("reopen_pending called with a non-pending top source");
        }
    }

    fn close_merged(
        &mut self,
        merged: OpenEnd,
        at: Endpoint,
        bot_segs: Vec<usize>,
        top_segs: Vec<usize>,
    ) {
        match merged.source {
            PathSource::End(a) => {
                let id = self.edges.len();
                self.edges.push(GEdge {
                    a,
                    b: at,
                    winding: merged.winding,
                    turns: merged.turns,
                    framing: merged.framing,
                    label: merged.label.shifted(-merged.winding),
                });
                for s in bot_segs {
                    self.resolution.insert(s, (id, true));
                }
                for s in top_segs {
                    self.resolution.insert(s, (id, false));
                }
            }
            PathSource::Pending(pid, leg) => {
                if let Some((other_end, w2, t2, f2, _l, leg2)) = self.pendings[pid].closed.take()
                {
                    let delta = if leg2 == 0 && leg == 1 {
                        self.pendings[pid].delta01
                    } else {
                        -self.pendings[pid].delta01
                    };
                    let id = self.edges.len();
                    let label_at_other = self.pendings[pid].labels[leg2].clone().shifted(w2);
                    self.edges.push(GEdge {
                        a: other_end,
                        b: at,
                        winding: -w2 + delta + merged.winding,
                        turns: -t2 + delta + merged.turns,
                        framing: f2 + merged.framing,
                        label: label_at_other,
                    });
                    for s in bot_segs {
                        self.resolution.insert(s, (id, true));
                    }
                    for s in top_segs {
                        self.resolution.insert(s, (id, false));
                    }
                    for s in std::mem::take(&mut self.pending_closed_segs[pid]) {
                        self.resolution.insert(s, (id, false));
                    }
                } else {
                    self.pendings[pid].closed = Some((
                        at,
                        merged.winding,
                        merged.turns,
                        merged.framing,
                        merged.label.clone(),
                        leg,
                    ));
                    let mut segs = bot_segs;
                    segs.extend(top_segs);
                    self.pending_closed_segs[pid] = segs;
                }
            }
        }
    }

    fn finish(mut self, d: &Diagram) -> PortGraph {
        let frontier = std::mem::take(&mut self.frontier);
        for (i, (id, o)) in frontier.into_iter().enumerate() {
            self.close(id, o, Endpoint::BoundaryOut(i));
        }
        // Resolve chained pendings (cup-cap-cup chains) that were parked with
        // sentinel endpoints.
        self.resolve_chains();
        let below = self
            .below_open
            .iter()
            .map(|b| {
                b.and_then(|open_id| {
                    self.resolution
                        .get(&open_id)
                        .map(|(e, fwd)| Host::AboveEdge { edge: *e, forward: *fwd })
                        .or(Some(Host::Bottom).filter(|_| false))
                })
                .or(if b.is_none() { Some(Host::Bottom) } else { None })
            })
            .collect();
        PortGraph {
            inputs: d.inputs.clone(),
            outputs: d.outputs.clone(),
            nodes: self.nodes,
            edges: self.edges,
            circles: self.circles,
            below,
        }
    }

    fn resolve_chains(&mut self) {
        // Pendings whose `closed` endpoint is a sentinel pointing at another
        // pending form chains; collapse them. Chains arise from nested turn
        // structures that fully dissolve (multi-wire eta/eps). Iterate until
        // stable.
        loop {
            let mut did = false;
            for pid in 0..self.pendings.len() {
                let Some((e, w, t, f, l, leg)) = self.pendings[pid].closed.clone() else {
                    continue;
                };
                if let Endpoint::BoundaryIn(x) = e {
                    if x > usize::MAX / 2 && x != usize::MAX {
                        let pid2 = usize::MAX - x;
                        if let Some((e2, w2, t2, f2, _l2, _leg2)) =
                            self.pendings[pid2].closed.clone()
                        {
                            if matches!(e2, Endpoint::BoundaryIn(y) if y > usize::MAX / 2 && y != usize::MAX)
                            {
                                continue; // resolve deeper chains first
                            }
                            // Fold pid2's closed side through into pid.
                            let delta2 = self.pendings[pid2].delta01;
                            let _ = delta2;
                            let merged_w = w + w2;
                            let merged_t = t + t2;
                            let merged_f = f + f2;
                            self.pendings[pid].closed =
                                Some((e2, merged_w, merged_t, merged_f, l.clone(), leg));
                            let segs2 = std::mem::take(&mut self.pending_closed_segs[pid2]);
                            self.pending_closed_segs[pid].extend(segs2);
                            self.pendings[pid2].closed = None;
                            did = true;
                        }
                    }
                }
            }
            if !did {
                break;
            }
        }
    }
}

impl PortGraph {
    /// Edges (with direction flag `a->b`) incident to each endpoint.
    pub fn incidence(&self) -> BTreeMap<Endpoint, Vec<(EdgeId, bool)>> {
        let mut map: BTreeMap<Endpoint, Vec<(EdgeId, bool)>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            map.entry(e.a).or_default().push((i, true));
            map.entry(e.b).or_default().push((i, false));
        }
        map
    }

    pub fn edge_at(&self, ep: Endpoint) -> Option<(EdgeId, bool)> {
        self.edges.iter().enumerate().find_map(|(i, e)| {
            if e.a == ep {
                Some((i, true))
            } else if e.b == ep {
                Some((i, false))
            } else {
                None
            }
        })
    }

    /// Check that every edge's winding is consistent with the parities of
    /// the labels at its two endpoints (exact, or mod 2 for pivotal
    /// regimes).
    pub fn winding_check(&self, mod2: bool) -> Result<(), DiagramError> {
        for e in &self.edges {
            let pa = self.endpoint_label(e.a).parity;
            let pb = self.endpoint_label(e.b).parity;
            let diff = pb - pa - e.winding;
            let bad = if mod2 { diff.rem_euclid(2) != 0 } else { diff != 0 };
            if bad {
                return Err(DiagramError::WindingInconsistency {
                    from: format!("{:?}", e.a),
                    to: format!("{:?}", e.b),
                    delta: e.winding,
                });
            }
        }
        Ok(())
    }

    pub fn endpoint_label(&self, ep: Endpoint) -> WireLabel {
        match ep {
            Endpoint::BoundaryIn(i) => self.inputs[i].clone(),
            Endpoint::BoundaryOut(i) => self.outputs[i].clone(),
            Endpoint::Port { node, dir, index } => match dir {
                PortDir::In => self.nodes[node].ins[index].clone(),
                PortDir::Out => self.nodes[node].outs[index].clone(),
            },
        }
    }
}

// Re-exports used by the iso and invariant modules.
pub use DotKind as GDotKind;

#[allow(unused)]
fn _silence(_: &Slice, _: &DiagramError) {}
