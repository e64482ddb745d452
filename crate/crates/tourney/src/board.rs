//! Board geometry and knight-move algebra.
//!
//! Cells of an `n x n` board are numbered in row-major order from 0 to
//! `n^2 - 1`. The eight knight moves are numbered counterclockwise 0
//! through 7; moves 0-3 point upward (toward lower rows) and moves 4-7
//! point downward, with `opposite(i) = (i + 4) mod 8`.

/// Column/row displacements for the eight knight moves, indexed by move
/// number. Entry `i` is `(dcol, drow)` with rows growing downward.
const DELTAS: [(i64, i64); 8] = [
    (2, -1),
    (1, -2),
    (-1, -2),
    (-2, -1),
    (-2, 1),
    (-1, 2),
    (1, 2),
    (2, 1),
];

/// One of the eight knight moves.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Move(u8);

impl Move {
    /// All eight moves in numeric order.
    pub const ALL: [Move; 8] = [
        Move(0),
        Move(1),
        Move(2),
        Move(3),
        Move(4),
        Move(5),
        Move(6),
        Move(7),
    ];

    /// The four downward moves (positive row displacement).
    pub const DOWNWARD: [Move; 4] = [Move(4), Move(5), Move(6), Move(7)];

    /// Builds a move from its number. Panics if `i >= 8`.
    pub fn new(i: u8) -> Move {
        assert!(i < 8, "move number out of range: {i}");
        Move(i)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The reverse displacement: `(i + 4) mod 8`.
    pub fn opposite(self) -> Move {
        Move((self.0 + 4) % 8)
    }

    /// Relative move number of `next` with respect to `self`:
    /// `(self - next) mod 8`. Zero means the move repeats, four would
    /// mean an exact reversal.
    pub fn rel(self, next: Move) -> Move {
        Move((self.0 + 8 - next.0) % 8)
    }

    /// `(dcol, drow)` displacement of this move.
    pub fn delta(self) -> (i64, i64) {
        DELTAS[self.0 as usize]
    }

    pub fn is_downward(self) -> bool {
        self.0 >= 4
    }
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An `n x n` chessboard with row-major cell indexing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Board {
    n: usize,
}

impl Board {
    pub fn new(n: usize) -> Board {
        assert!(n >= 1, "board side must be positive");
        Board { n }
    }

    /// Side length.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of cells, `n^2`.
    pub fn cells(&self) -> usize {
        self.n * self.n
    }

    pub fn row(&self, cell: usize) -> usize {
        cell / self.n
    }

    pub fn col(&self, cell: usize) -> usize {
        cell % self.n
    }

    pub fn cell_at(&self, col: usize, row: usize) -> usize {
        debug_assert!(col < self.n && row < self.n);
        row * self.n + col
    }

    /// The cell reached by move `m` from `v`, or `None` if it leaves the
    /// board.
    pub fn dest(&self, v: usize, m: Move) -> Option<usize> {
        debug_assert!(v < self.cells());
        let (dc, dr) = m.delta();
        let c = self.col(v) as i64 + dc;
        let r = self.row(v) as i64 + dr;
        let n = self.n as i64;
        if c < 0 || c >= n || r < 0 || r >= n {
            None
        } else {
            Some((r * n + c) as usize)
        }
    }

    /// The move that takes a knight from `u` to `v`, or `None` if the
    /// cells are not a knight's move apart.
    pub fn km(&self, u: usize, v: usize) -> Option<Move> {
        debug_assert!(u < self.cells() && v < self.cells());
        let dc = self.col(v) as i64 - self.col(u) as i64;
        let dr = self.row(v) as i64 - self.row(u) as i64;
        DELTAS
            .iter()
            .position(|&d| d == (dc, dr))
            .map(|i| Move(i as u8))
    }

    /// Cells adjacent to `v` in the knight's graph, in move-number order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Move::ALL.into_iter().filter_map(move |m| self.dest(v, m))
    }

    /// Degree of `v` in the knight's graph.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Number of undirected edges of the knight's graph, as half the
    /// degree sum.
    pub fn edge_count(&self) -> usize {
        (0..self.cells()).map(|v| self.degree(v)).sum::<usize>() / 2
    }
}
