//! Bundled sample datasets.

/// Monthly mean temperature (°C) against mean rainfall (mm) for Amarante, 12 rows.
pub const EXAMPLE1_AMARANTE: &str = include_str!("../fixtures/example1_amarante.csv");

/// Cumulative infection count against day index (days 67 to 90), 24 rows.
pub const EXAMPLE2_INFECTIONS: &str = include_str!("../fixtures/example2_infections.csv");

/// File name and contents of every bundled dataset.
pub const ALL: [(&str, &str); 2] = [
    ("example1_amarante.csv", EXAMPLE1_AMARANTE),
    ("example2_infections.csv", EXAMPLE2_INFECTIONS),
];
