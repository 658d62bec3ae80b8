"""Pure-Python violator scan; same contract as the compiled ``_scan``."""


class ViolationScanner:
    def __init__(self, a, b, c, kind, ident, tol):
        self.a = [float(v) for v in a]
        self.b = [float(v) for v in b]
        self.c = [float(v) for v in c]
        self.kind = [int(v) for v in kind]
        self.ident = [int(v) for v in ident]
        self.tol = float(tol)
        self.n = len(self.a)

    def first_violator(self, start, stop, vx, vy, dkind, dr, did):
        a, b, c, kind, ident, tol = self.a, self.b, self.c, self.kind, self.ident, self.tol
        for i in range(start, stop):
            k = kind[i]
            if k > dkind:
                continue
            if k == dkind:
                if k == 0:
                    if c[i] > dr or (c[i] == dr and ident[i] >= did):
                        continue
                elif ident[i] >= did:
                    continue
            if k == 0:
                dx = vx - a[i]
                dy = vy - b[i]
                rt = c[i] + tol
                if dx * dx + dy * dy > rt * rt:
                    return i
            elif a[i] * vx + b[i] * vy > c[i] + tol:
                return i
        return -1
