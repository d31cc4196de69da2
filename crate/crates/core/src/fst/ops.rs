use std::collections::HashMap;

use super::{Arc, StateId, Symbol, Transducer};

const EPS: Symbol = Symbol::Epsilon;

fn shifted(t: &Transducer, by: StateId) -> impl Iterator<Item = Arc> + '_ {
    t.arcs().iter().map(move |a| Arc {
        from: a.from + by,
        to: a.to + by,
        ..*a
    })
}

pub fn union(a: &Transducer, b: &Transducer) -> Transducer {
    // 0 is the new start, then a's states, then b's
    let off_a = 1;
    let off_b = 1 + a.num_states();
    let mut arcs: Vec<Arc> = shifted(a, off_a).chain(shifted(b, off_b)).collect();
    arcs.push(Arc {
        from: 0,
        input: EPS,
        output: EPS,
        to: a.start() + off_a,
    });
    arcs.push(Arc {
        from: 0,
        input: EPS,
        output: EPS,
        to: b.start() + off_b,
    });
    let finals = a
        .finals()
        .map(|f| f + off_a)
        .chain(b.finals().map(|f| f + off_b));
    Transducer::from_parts(off_b + b.num_states(), 0, finals, arcs)
        .expect("union produced an invalid machine")
}

pub fn concat(a: &Transducer, b: &Transducer) -> Transducer {
    let off_b = a.num_states();
    let mut arcs: Vec<Arc> = shifted(a, 0).chain(shifted(b, off_b)).collect();
    for f in a.finals() {
        arcs.push(Arc {
            from: f,
            input: EPS,
            output: EPS,
            to: b.start() + off_b,
        });
    }
    let finals: Vec<_> = b.finals().map(|f| f + off_b).collect();
    Transducer::from_parts(off_b + b.num_states(), a.start(), finals, arcs)
        .expect("concat produced an invalid machine")
}

pub(super) fn closure(a: &Transducer) -> Transducer {
    let mut arcs: Vec<Arc> = shifted(a, 1).collect();
    arcs.push(Arc {
        from: 0,
        input: EPS,
        output: EPS,
        to: a.start() + 1,
    });
    for f in a.finals() {
        arcs.push(Arc {
            from: f + 1,
            input: EPS,
            output: EPS,
            to: 0,
        });
    }
    Transducer::from_parts(a.num_states() + 1, 0, [0], arcs)
        .expect("closure produced an invalid machine")
}

/// Swaps input and output on every arc.
pub fn invert(a: &Transducer) -> Transducer {
    let arcs = a
        .arcs()
        .iter()
        .map(|arc| Arc {
            input: arc.output,
            output: arc.input,
            ..*arc
        })
        .collect();
    Transducer::from_parts(a.num_states(), a.start(), a.finals(), arcs)
        .expect("invert produced an invalid machine")
}

/// Relational composition `a ∘ b`: pairs `(x, z)` such that `a` maps `x` to
/// some `y` and `b` maps `y` to `z`.
///
/// Epsilon moves go through the usual three-state sequencing filter so each
/// pair of component paths yields exactly one composed path:
/// filter 1 means `a` has moved alone, 2 means `b` has moved alone.
pub fn compose(a: &Transducer, b: &Transducer) -> Transducer {
    let mut ids: HashMap<(StateId, StateId, u8), StateId> = HashMap::new();
    let mut queue: Vec<(StateId, StateId, u8)> = Vec::new();
    let mut arcs = Vec::new();
    let mut finals = Vec::new();

    let intern = |key: (StateId, StateId, u8), ids: &mut HashMap<_, _>, queue: &mut Vec<_>| {
        let len = ids.len() as StateId;
        *ids.entry(key).or_insert_with(|| {
            queue.push(key);
            len
        })
    };

    intern((a.start(), b.start(), 0), &mut ids, &mut queue);
    while let Some(key @ (qa, qb, filter)) = queue.pop() {
        let from = ids[&key];
        if a.is_final(qa) && b.is_final(qb) {
            finals.push(from);
        }
        for arc_a in a.arcs_from(qa) {
            if arc_a.output.is_epsilon() {
                if filter != 2 {
                    let to = intern((arc_a.to, qb, 1), &mut ids, &mut queue);
                    arcs.push(Arc {
                        from,
                        input: arc_a.input,
                        output: EPS,
                        to,
                    });
                }
                if filter == 0 {
                    for arc_b in b.arcs_with_input(qb, EPS) {
                        let to = intern((arc_a.to, arc_b.to, 0), &mut ids, &mut queue);
                        arcs.push(Arc {
                            from,
                            input: arc_a.input,
                            output: arc_b.output,
                            to,
                        });
                    }
                }
            } else {
                for arc_b in b.arcs_with_input(qb, arc_a.output) {
                    let to = intern((arc_a.to, arc_b.to, 0), &mut ids, &mut queue);
                    arcs.push(Arc {
                        from,
                        input: arc_a.input,
                        output: arc_b.output,
                        to,
                    });
                }
            }
        }
        if filter != 1 {
            for arc_b in b.arcs_with_input(qb, EPS) {
                let to = intern((qa, arc_b.to, 2), &mut ids, &mut queue);
                arcs.push(Arc {
                    from,
                    input: EPS,
                    output: arc_b.output,
                    to,
                });
            }
        }
    }
    Transducer::from_parts(ids.len() as StateId, 0, finals, arcs)
        .expect("compose produced an invalid machine")
}
