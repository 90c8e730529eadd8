/// Bordism words covering every generator, separator and exponent form.
pub const CORPUS: [&str; 20] = [
    "Dt . D",
    "Dt D",
    "dt.d",
    "Dt . L . D",
    "Dt . L^2 . D",
    "Dt ∘ L^3 ∘ D",
    "Dt . JP . D",
    "Dt . jm . D",
    "Dt . MI . D",
    "Dt . MI^2 . D",
    "Dt . JP . MI . L^2 . D",
    "Dt JP JM MI L D",
    "DT . jP^4 . Jm^2 . mI^3 . l^5 . d",
    "Dt∘L∘JP∘L∘D",
    "  Dt   .   L   .   D  ",
    "Dt . L^10 . D",
    "Dt . JM . JM . JP^2 . D",
    "Dt . MI . L . MI . L . D",
    "Dt\t.\tJP^1\t.\tD",
    "Dt . L^2 . JP^3 . JM . MI^2 . L . D",
];
