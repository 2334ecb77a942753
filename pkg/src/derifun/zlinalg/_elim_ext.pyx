# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled unit-pivot elimination, the hot loop behind homology ranks.

Mirrors ``elim.unit_phase_python`` on int64 entries. Any overflow raises
OverflowError so the caller can redo the work with Python integers.
"""

from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int derifun_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int derifun_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int derifun_mul_ovf(long long a, long long b, long long *r) nogil
    int derifun_sub_ovf(long long a, long long b, long long *r) nogil

ctypedef pair[int, int64_t] Entry
ctypedef vector[Entry] Row

cdef int64_t LIMIT = 1LL << 62


cdef int has_col(Row& row, int c) nogil:
    cdef size_t lo = 0, hi = row.size(), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid].first < c:
            lo = mid + 1
        else:
            hi = mid
    return lo < row.size() and row[lo].first == c


cdef int64_t get_col(Row& row, int c) nogil:
    cdef size_t lo = 0, hi = row.size(), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid].first < c:
            lo = mid + 1
        else:
            hi = mid
    if lo < row.size() and row[lo].first == c:
        return row[lo].second
    return 0


def unit_phase(int nrows, columns):
    """Eliminate unit pivots of the matrix given by sparse ``columns``.

    Returns ``(rank, leftover)`` where leftover maps row -> {col: value}.
    """
    cdef int ncols = len(columns)
    cdef vector[Row] rows = vector[Row](nrows)
    cdef vector[vector[int]] cols = vector[vector[int]](ncols)
    cdef vector[int] count = vector[int](ncols, 0)
    cdef vector[char] removed = vector[char](nrows, 0)
    cdef vector[int] stamp = vector[int](nrows, -1)
    cdef int i, j, k, pc, i2, rank = 0, best_cost, length
    cdef int64_t v, pv, f, s, t
    cdef long long tmp
    cdef Row merged
    cdef size_t a, b
    cdef priority_queue[pair[int, int]] heap

    for j in range(ncols):
        for i, pyv in columns[j].items():
            if pyv >= LIMIT or pyv <= -LIMIT:
                raise OverflowError("entry too large for the compiled kernel")
            rows[i].push_back(Entry(j, <int64_t>pyv))
            cols[j].push_back(i)
            count[j] += 1
    for i in range(nrows):
        if rows[i].size():
            heap.push(pair[int, int](-<int>rows[i].size(), -i))

    while not heap.empty():
        length = -heap.top().first
        i = -heap.top().second
        heap.pop()
        if removed[i] or <int>rows[i].size() != length or length == 0:
            continue
        pc = -1
        best_cost = 0
        for k in range(length):
            v = rows[i][k].second
            if v == 1 or v == -1:
                j = rows[i][k].first
                if pc < 0 or count[j] < best_cost:
                    pc = j
                    pv = v
                    best_cost = count[j]
                    if best_cost == 1:
                        break
        if pc < 0:
            continue
        removed[i] = 1
        for k in range(length):
            count[rows[i][k].first] -= 1
        for k in range(<int>cols[pc].size()):
            i2 = cols[pc][k]
            if i2 == i or removed[i2] or stamp[i2] == rank:
                continue
            stamp[i2] = rank
            f = get_col(rows[i2], pc)
            if f == 0:
                continue
            f = f * pv
            merged.clear()
            a = 0
            b = 0
            while a < rows[i2].size() or b < rows[i].size():
                if b >= rows[i].size() or (a < rows[i2].size() and rows[i2][a].first < rows[i][b].first):
                    merged.push_back(rows[i2][a])
                    a += 1
                elif a >= rows[i2].size() or rows[i][b].first < rows[i2][a].first:
                    if derifun_mul_ovf(f, rows[i][b].second, &tmp):
                        raise OverflowError("entry growth exceeded int64")
                    j = rows[i][b].first
                    merged.push_back(Entry(j, -tmp))
                    count[j] += 1
                    cols[j].push_back(i2)
                    b += 1
                else:
                    j = rows[i][b].first
                    if derifun_mul_ovf(f, rows[i][b].second, &tmp):
                        raise OverflowError("entry growth exceeded int64")
                    t = tmp
                    if derifun_sub_ovf(rows[i2][a].second, t, &tmp):
                        raise OverflowError("entry growth exceeded int64")
                    s = tmp
                    if s >= LIMIT or s <= -LIMIT:
                        raise OverflowError("entry growth exceeded int64")
                    if s != 0:
                        merged.push_back(Entry(j, s))
                    else:
                        count[j] -= 1
                    a += 1
                    b += 1
            rows[i2].swap(merged)
            if rows[i2].size():
                heap.push(pair[int, int](-<int>rows[i2].size(), -i2))
        cols[pc].clear()
        rank += 1

    leftover = {}
    for i in range(nrows):
        if not removed[i] and rows[i].size():
            leftover[i] = {rows[i][k].first: rows[i][k].second for k in range(<int>rows[i].size())}
    return rank, leftover
