use quiver_core::Quiver;

/// A reduced quiver together with chosen 2-cycles and loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateQuiver {
    /// The 2-acyclic, loop-free part.
    pub base: Quiver,
    /// Unordered vertex pairs `(i, j)` with `i < j`, each joined by a 2-cycle.
    pub two_cycles: Vec<(usize, usize)>,
    /// Vertices carrying one loop, ascending.
    pub loops: Vec<usize>,
    pub assembled: Quiver,
}

impl CandidateQuiver {
    pub fn new(base: Quiver, two_cycles: Vec<(usize, usize)>, loops: Vec<usize>) -> Self {
        let mut assembled = base.clone();
        for &(i, j) in &two_cycles {
            assembled.add_arrows(i, j, 1);
            assembled.add_arrows(j, i, 1);
        }
        for &v in &loops {
            assembled.add_arrows(v, v, 1);
        }
        CandidateQuiver {
            base,
            two_cycles,
            loops,
            assembled,
        }
    }

    /// The assembled quiver without its loops.
    pub fn loop_free(&self) -> Quiver {
        self.assembled.loop_free()
    }
}
