import pathlib

from leaguerank.models import GroupSubmission, QualityProfile


def path_to_data_dir(name):
    path = pathlib.Path(__file__).parent / "data" / name
    return path.resolve()


def make_group(institution, proportions, fte_staff=10.0, unit="UOA22"):
    return GroupSubmission(
        institution=institution,
        unit=unit,
        fte_staff=fte_staff,
        profile=QualityProfile(proportions=proportions),
    )


class IsA:
    def __init__(self, klass):
        self.klass = klass

    def __eq__(self, rhs):
        try:
            return isinstance(rhs, self.klass)
        except TypeError:
            return type(rhs) == type(self.klass)  # noqa

    def __ne__(self, rhs):
        return not self.__eq__(rhs)

    def __repr__(self):
        return str(self.klass)


any_str = IsA(str)
