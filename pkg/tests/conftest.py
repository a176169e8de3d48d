from hypothesis import settings

settings.register_profile("recurlab", deadline=None, max_examples=200)
settings.load_profile("recurlab")
