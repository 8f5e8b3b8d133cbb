_class_registry_cache = {}


def _import_class(cls_name):
    """Cache mechanism for imports.

    The graphon, skeleton and document modules refer to one another: the
    loop-free reduction needs strongly connected components, the graphon
    field needs the graphon document, and the skeleton report needs both.
    :mod:`hamgraphon.common` provides a single point to import these names
    lazily.  Circular imports aren't an issue as the owning module is
    imported when a name is first needed.  Subsequent calls to
    :func:`~hamgraphon.common._import_class` directly retrieve the object
    from :data:`hamgraphon.common._class_registry_cache`.
    """
    if cls_name in _class_registry_cache:
        return _class_registry_cache.get(cls_name)

    doc_classes = ('Document', 'GraphonDocument')
    skeleton_names = ('SkeletonGraph', 'skeleton_of',
                      'strongly_connected_components')
    graphon_names = ('StepGraphon', 'Partition')

    if cls_name in doc_classes:
        from hamgraphon import document as module
        import_classes = doc_classes
    elif cls_name in skeleton_names:
        from hamgraphon import skeleton as module
        import_classes = skeleton_names
    elif cls_name in graphon_names:
        from hamgraphon import graphon as module
        import_classes = graphon_names
    else:
        raise ValueError('No import set for: %s' % cls_name)

    for cls in import_classes:
        _class_registry_cache[cls] = getattr(module, cls)

    return _class_registry_cache.get(cls_name)
