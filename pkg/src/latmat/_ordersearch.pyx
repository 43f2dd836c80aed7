# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of latmat.ordersearch._scan_py.

Same contract, same lexicographic enumeration, same result.  Kept in lockstep
with the pure version; the backend equivalence test exercises both.
"""


def scan(int n, int rank, bases, bytes indep_table, int first_mask):
    cdef int perm[12]
    cdef int a[12]
    cdef int b[12]
    cdef long long basearr[1024]
    cdef long long f[12]
    cdef long long g[12]
    cdef int nb = len(bases)
    cdef int i, j, k, e, tmp, lo, hi, got, cand, ok, na, nbp
    cdef long long acc, total, bm
    cdef const unsigned char* table = indep_table

    if n == 0:
        return ()
    if nb > 1024:
        raise ValueError("too many bases for the compiled scanner")
    for i in range(nb):
        basearr[i] = bases[i]
    for i in range(n):
        perm[i] = i

    while True:
        # reversal symmetry: only scan the half with perm[0] < perm[n-1]
        if perm[0] <= perm[n - 1]:
            if first_mask == 0 or ((first_mask >> perm[0]) & 1) or (
                (first_mask >> perm[n - 1]) & 1
            ):
                # greedy minimum basis -> lower endpoints a
                na = 0
                got = 0
                for i in range(n):
                    cand = got | (1 << perm[i])
                    if table[cand]:
                        got = cand
                        a[na] = i
                        na += 1
                        if na == rank:
                            break
                # greedy maximum basis -> upper endpoints b
                nbp = 0
                got = 0
                for i in range(n - 1, -1, -1):
                    cand = got | (1 << perm[i])
                    if table[cand]:
                        got = cand
                        b[rank - 1 - nbp] = i
                        nbp += 1
                        if nbp == rank:
                            break
                # count increasing transversals of the candidate intervals
                if rank == 0:
                    total = 1
                else:
                    for i in range(n):
                        if a[0] <= i <= b[0]:
                            f[i] = 1
                        else:
                            f[i] = 0
                    for j in range(1, rank):
                        acc = 0
                        for i in range(n):
                            if i > 0:
                                acc += f[i - 1]
                            if a[j] <= i <= b[j]:
                                g[i] = acc
                            else:
                                g[i] = 0
                        for i in range(n):
                            f[i] = g[i]
                    total = 0
                    for i in range(n):
                        total += f[i]
                if total == nb:
                    ok = 1
                    for k in range(nb):
                        bm = basearr[k]
                        j = 0
                        for i in range(n):
                            if (bm >> perm[i]) & 1:
                                if i < a[j] or i > b[j]:
                                    ok = 0
                                    break
                                j += 1
                        if not ok:
                            break
                    if ok:
                        return [perm[i] for i in range(n)]
        # next permutation (lexicographic)
        i = n - 2
        while i >= 0 and perm[i] >= perm[i + 1]:
            i -= 1
        if i < 0:
            return None
        j = n - 1
        while perm[j] <= perm[i]:
            j -= 1
        tmp = perm[i]
        perm[i] = perm[j]
        perm[j] = tmp
        lo = i + 1
        hi = n - 1
        while lo < hi:
            tmp = perm[lo]
            perm[lo] = perm[hi]
            perm[hi] = tmp
            lo += 1
            hi -= 1
