pub const CANONICAL: [(&str, &str); 23] = [
    ("x(x^2-1)", "y(y^2-1)"),
    ("x(x^2+1)", "y(y^2+1)"),
    ("x^3", "y^3"),
    ("2x(x^2-1)", "(3x-y)(y^2-1)"),
    ("2x(x^2+1)", "(3x-y)(y^2+1)"),
    ("2x^3", "y^2(3x-y)"),
    ("x(1+x^2)", "y(1-y^2)"),
    ("x^3", "-y^3"),
    ("x(1+x^2-3y^2)", "y(1+3x^2-y^2)"),
    ("x(x^2-3y^2)", "y(3x^2-y^2)"),
    ("2x(x^2-1)", "y(3x^2+y^2+1)"),
    ("2x(x^2+1)", "y(3x^2+y^2-1)"),
    ("2x^3", "y(3x^2+y^2)"),
    ("x(x^2-1)", "2y"),
    ("x(x^2+1)", "-2y"),
    ("x(x^2-1)", "-y"),
    ("x(x^2+1)", "y"),
    ("x^3", "1"),
    ("x(x^2-1)", "y(3x^2-1)"),
    ("x(x^2+1)", "y(3x^2+1)"),
    ("2x(x^2-1)", "y(3x^2+1)"),
    ("2x(x^2+1)", "y(3x^2-1)"),
    ("x", "y-x^3"),
];
