"""Counting the words at a given d2 distance from a center.

The closed form splits the sphere by word length; enumeration over the
finite window of possible lengths gives the same numbers.
"""

from hamming_compat import D2, Alphabet, enumerate_sphere, parse_word, sphere_count_by_enumeration, sphere_size

A = Alphabet("01")
u = parse_word("00", A)

for r in range(4):
    s = sphere_size(u, r, A)
    e = sphere_count_by_enumeration(D2, u, r, A)
    print(f"r={r}: total {s.total:>4}  by length {s.by_length}  enumeration agrees: {s.by_length == e.by_length}")

print("\nradius 1 around 00:", " ".join(A.render(v) or "ε" for v in enumerate_sphere(D2, u, 1, A)))

# every word of length j sits on exactly one sphere
center = parse_word("010", A)
for j in range(6):
    total = sum(sphere_size(center, r, A).by_length.get(j, 0) for r in range(7))
    print(f"length {j}: {total} words over all radii (2^{j} = {2 ** j})")
